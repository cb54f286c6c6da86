#pragma once

#include "vjsim/random.hpp"

#include <cstdint>
#include <vector>

namespace vjsim {

using AuthorId = std::uint32_t;
using PaperId = std::uint32_t;

/// One author. The Q-factor is drawn once, at first publication, and never
/// mutated afterwards.
struct AuthorRecord {
    double q_factor;
    std::int32_t first_paper_month;
    std::vector<PaperId> papers;
};

class AuthorRegistry {
public:
    AuthorId add(double q_factor, std::int32_t month);
    void note_paper(AuthorId author, PaperId paper);

    std::size_t size() const { return authors_.size(); }
    bool empty() const { return authors_.empty(); }
    const AuthorRecord& at(AuthorId id) const;
    const std::vector<AuthorRecord>& records() const { return authors_; }
    std::vector<AuthorRecord> take_records() && { return std::move(authors_); }

    /// Number of papers listing the author. Throws on unknown ids.
    std::size_t productivity(AuthorId id) const { return at(id).papers.size(); }

private:
    std::vector<AuthorRecord> authors_;
};

/// Author ability: exp of a Gaussian with log-mean mu and log-sd sigma
/// (median e^mu; sigma = 0 gives the degenerate point e^mu).
double assign_q_factor(double mu, double sigma, RandomStream& rng);

} // namespace vjsim
