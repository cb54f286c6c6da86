#include "vjsim/team_assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vjsim {

std::size_t TeamDraft::newcomer_count() const {
    std::size_t n = 0;
    for (std::uint8_t flag : newcomer_flags)
        n += flag;
    return n;
}

double expected_newcomers(double mean_team_size, double newcomer_prob) {
    if (mean_team_size < 0.0)
        throw std::invalid_argument("expected_newcomers: mean team size must be non-negative");
    if (newcomer_prob < 0.0 || newcomer_prob > 1.0)
        throw std::invalid_argument("expected_newcomers: probability must lie in [0,1]");
    return mean_team_size * newcomer_prob;
}

namespace {

inline double incumbent_weight(std::uint64_t collabs, double nu, double k0) {
    const double base = collabs > 0 ? static_cast<double>(collabs) : k0;
    return nu == 1.0 ? base : std::pow(base, nu);
}

inline bool is_excluded(AuthorId id, std::span<const AuthorId> exclude) {
    return std::find(exclude.begin(), exclude.end(), id) != exclude.end();
}

} // namespace

std::optional<AuthorId> select_incumbent(std::span<const std::uint64_t> collab_counts,
                                         std::span<const AuthorId> exclude, double nu, double k0,
                                         RandomStream& rng) {
    double total = 0.0;
    for (AuthorId id = 0; id < collab_counts.size(); ++id)
        if (!is_excluded(id, exclude))
            total += incumbent_weight(collab_counts[id], nu, k0);
    if (!(total > 0.0))
        return std::nullopt;

    const double target = rng.uniform01() * total;
    double acc = 0.0;
    std::optional<AuthorId> last;
    for (AuthorId id = 0; id < collab_counts.size(); ++id) {
        if (is_excluded(id, exclude))
            continue;
        acc += incumbent_weight(collab_counts[id], nu, k0);
        last = id;
        if (acc > target)
            return id;
    }
    return last; // target == total after rounding
}

TeamDraft assemble_team(int team_size, const AssemblyParams& params, AuthorRegistry& registry,
                        CollaborationMatrix& matrix, std::int32_t month, RandomStream& rng) {
    if (team_size < 1)
        throw std::invalid_argument("assemble_team: team size must be >= 1");

    // Incumbent pool is everyone registered before this team started; the
    // matrix is grown to cover them (late registrants carry zero rows).
    matrix.ensure_authors(registry.size());
    const auto counts = matrix.weighted_degrees();

    TeamDraft draft;
    draft.members.reserve(static_cast<std::size_t>(team_size));
    draft.newcomer_flags.reserve(static_cast<std::size_t>(team_size));

    for (int slot = 0; slot < team_size; ++slot) {
        bool newcomer = rng.uniform01() < params.newcomer_prob;
        if (!newcomer) {
            const auto pick = select_incumbent(counts, draft.members, params.pa_exponent,
                                               params.initial_connectivity, rng);
            if (pick) {
                draft.members.push_back(*pick);
                draft.newcomer_flags.push_back(0);
                continue;
            }
            newcomer = true; // pool exhausted, degrade the slot
        }
        const double q = assign_q_factor(params.q_mu, params.q_sigma, rng);
        draft.members.push_back(registry.add(q, month));
        draft.newcomer_flags.push_back(1);
    }
    return draft;
}

double paper_quality(std::span<const double> member_q_factors, double noise_halfwidth,
                     RandomStream& rng) {
    if (member_q_factors.empty())
        throw std::invalid_argument("paper_quality: team must be non-empty");
    if (noise_halfwidth < 0.0 || noise_halfwidth >= 1.0)
        throw std::invalid_argument("paper_quality: noise halfwidth must lie in [0,1)");
    const double noise = 1.0 + noise_halfwidth * (2.0 * rng.uniform01() - 1.0);
    return noise * *std::max_element(member_q_factors.begin(), member_q_factors.end());
}

} // namespace vjsim
