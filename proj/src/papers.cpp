#include "vjsim/papers.hpp"

#include <stdexcept>
#include <string>

namespace vjsim {

PaperId Corpus::add_paper(std::int32_t month, double quality, std::vector<AuthorId> team) {
    if (!(quality > 0.0))
        throw std::invalid_argument("Corpus::add_paper: quality must be positive");
    records_.push_back(PaperRecord{month, quality, std::move(team), {}, {}});
    months_.push_back(month);
    qualities_.push_back(quality);
    cites_.push_back(0);
    return static_cast<PaperId>(records_.size() - 1);
}

void Corpus::add_citation(PaperId citing, PaperId cited, std::int32_t month) {
    if (citing >= records_.size() || cited >= records_.size())
        throw std::out_of_range("Corpus::add_citation: unknown paper id");
    if (citing == cited)
        throw std::invalid_argument("Corpus::add_citation: self-citation");
    records_[citing].references.push_back(cited);
    records_[cited].citation_months.push_back(month);
    ++cites_[cited];
    ++total_references_;
    ++total_citations_;
}

const PaperRecord& Corpus::at(PaperId id) const {
    if (id >= records_.size())
        throw std::out_of_range("unknown paper id " + std::to_string(id));
    return records_[id];
}

} // namespace vjsim
