#pragma once

#include "vjsim/authors.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace vjsim {

/// One paper in the ledger. references are distinct ids of older-or-same-month
/// papers; citation_months records when each received citation arrived
/// (non-decreasing by construction). The received-citation count is the
/// length of that list.
struct PaperRecord {
    std::int32_t month;
    double quality;
    std::vector<AuthorId> team;
    std::vector<PaperId> references;
    std::vector<std::int32_t> citation_months;

    std::size_t n_cites() const { return citation_months.size(); }
};

/// Paper ledger plus flat hot columns (publication month, quality, received
/// citations) mirrored for the weight kernel. All mutation goes through
/// add_paper / add_citation, which keeps records and columns consistent.
class Corpus {
public:
    PaperId add_paper(std::int32_t month, double quality, std::vector<AuthorId> team);
    void add_citation(PaperId citing, PaperId cited, std::int32_t month);

    std::size_t size() const { return records_.size(); }
    const PaperRecord& at(PaperId id) const;
    const std::vector<PaperRecord>& records() const { return records_; }
    std::vector<PaperRecord> take_records() && { return std::move(records_); }

    std::span<const std::int32_t> months() const { return months_; }
    std::span<const double> qualities() const { return qualities_; }
    std::span<const std::uint32_t> citation_counts() const { return cites_; }

    std::size_t total_references() const { return total_references_; }
    std::size_t total_citations() const { return total_citations_; }

private:
    std::vector<PaperRecord> records_;
    std::vector<std::int32_t> months_;
    std::vector<double> qualities_;
    std::vector<std::uint32_t> cites_;
    std::size_t total_references_ = 0;
    std::size_t total_citations_ = 0;
};

} // namespace vjsim
