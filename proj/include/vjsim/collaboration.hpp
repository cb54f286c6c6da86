#pragma once

#include "vjsim/authors.hpp"

#include <cstdint>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace vjsim {

/// Sparse symmetric author-by-author collaboration counts. Entry (i,j) is
/// the number of papers i and j have coauthored; no diagonal entries. The
/// per-author weighted degree k_i (sum of row i) is cached and kept
/// consistent by construction.
class CollaborationMatrix {
public:
    void ensure_authors(std::size_t count);

    /// Increment every unordered pair within the team by one (the team is a
    /// complete graph). Members must be distinct; single-author teams leave
    /// the matrix unchanged.
    void record_team(std::span<const AuthorId> team);

    std::size_t author_count() const { return adjacency_.size(); }

    /// Collaboration count between two authors (0 if never coauthored).
    std::uint32_t pair_count(AuthorId a, AuthorId b) const;

    /// Number of distinct coauthors (binarized degree). Throws on unknown ids.
    std::size_t collaborator_count(AuthorId author) const;

    /// Accumulated collaborations k_i (weighted row sum). Throws on unknown ids.
    std::uint64_t weighted_degree(AuthorId author) const;

    std::span<const std::uint64_t> weighted_degrees() const { return weighted_degree_; }

    /// All edges as (i, j, weight) with i < j, sorted.
    std::vector<std::tuple<AuthorId, AuthorId, std::uint32_t>> edges() const;

private:
    void check_author(AuthorId author) const;

    std::vector<std::unordered_map<AuthorId, std::uint32_t>> adjacency_;
    std::vector<std::uint64_t> weighted_degree_;
};

} // namespace vjsim
