#include "vjsim/collaboration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vjsim {

void CollaborationMatrix::ensure_authors(std::size_t count) {
    if (count > adjacency_.size()) {
        adjacency_.resize(count);
        weighted_degree_.resize(count, 0);
    }
}

void CollaborationMatrix::check_author(AuthorId author) const {
    if (author >= adjacency_.size())
        throw std::out_of_range("unknown author id " + std::to_string(author));
}

void CollaborationMatrix::record_team(std::span<const AuthorId> team) {
    if (team.empty())
        return;
    AuthorId max_id = 0;
    for (AuthorId a : team)
        max_id = std::max(max_id, a);
    ensure_authors(static_cast<std::size_t>(max_id) + 1);

    for (std::size_t i = 0; i < team.size(); ++i) {
        for (std::size_t j = i + 1; j < team.size(); ++j) {
            const AuthorId a = team[i], b = team[j];
            if (a == b)
                throw std::invalid_argument("record_team: team members must be distinct");
            ++adjacency_[a][b];
            ++adjacency_[b][a];
            ++weighted_degree_[a];
            ++weighted_degree_[b];
        }
    }
}

std::uint32_t CollaborationMatrix::pair_count(AuthorId a, AuthorId b) const {
    if (a >= adjacency_.size())
        return 0;
    const auto it = adjacency_[a].find(b);
    return it == adjacency_[a].end() ? 0 : it->second;
}

std::size_t CollaborationMatrix::collaborator_count(AuthorId author) const {
    check_author(author);
    return adjacency_[author].size();
}

std::uint64_t CollaborationMatrix::weighted_degree(AuthorId author) const {
    check_author(author);
    return weighted_degree_[author];
}

std::vector<std::tuple<AuthorId, AuthorId, std::uint32_t>> CollaborationMatrix::edges() const {
    std::vector<std::tuple<AuthorId, AuthorId, std::uint32_t>> out;
    for (AuthorId a = 0; a < adjacency_.size(); ++a)
        for (const auto& [b, weight] : adjacency_[a])
            if (a < b)
                out.emplace_back(a, b, weight);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace vjsim
