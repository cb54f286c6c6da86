#include "vjsim/authors.hpp"

#include <cmath>
#include <stdexcept>

namespace vjsim {

AuthorId AuthorRegistry::add(double q_factor, std::int32_t month) {
    authors_.push_back(AuthorRecord{q_factor, month, {}});
    return static_cast<AuthorId>(authors_.size() - 1);
}

void AuthorRegistry::note_paper(AuthorId author, PaperId paper) {
    authors_.at(author).papers.push_back(paper);
}

const AuthorRecord& AuthorRegistry::at(AuthorId id) const {
    if (id >= authors_.size())
        throw std::out_of_range("unknown author id " + std::to_string(id));
    return authors_[id];
}

double assign_q_factor(double mu, double sigma, RandomStream& rng) {
    if (sigma < 0.0)
        throw std::invalid_argument("assign_q_factor: sigma must be non-negative");
    return std::exp(rng.normal(mu, sigma));
}

} // namespace vjsim
