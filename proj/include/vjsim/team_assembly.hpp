#pragma once

#include "vjsim/authors.hpp"
#include "vjsim/collaboration.hpp"
#include "vjsim/random.hpp"

#include <optional>
#include <span>
#include <vector>

namespace vjsim {

/// Team for one new paper: distinct member ids and, per slot, whether the
/// member entered the registry with this paper.
struct TeamDraft {
    std::vector<AuthorId> members;
    std::vector<std::uint8_t> newcomer_flags;

    std::size_t newcomer_count() const;
};

struct AssemblyParams {
    double newcomer_prob; // p
    double pa_exponent;   // nu
    double initial_connectivity; // k0, weight of authors with no collaborations
    double q_mu;
    double q_sigma;
};

/// Expected newcomers per paper for average team size m: k = m * p.
double expected_newcomers(double mean_team_size, double newcomer_prob);

/// Draw one incumbent with probability proportional to
/// max(k_i, sentinel k0)^nu over the non-excluded pool {0..counts.size()-1}.
/// Authors with k_i >= 1 weigh exactly k_i^nu; zero-collaboration authors
/// weigh k0^nu. Returns nullopt when every candidate is excluded (the
/// caller falls back to a newcomer). Consumes one uniform per successful
/// draw, none when the pool is exhausted.
std::optional<AuthorId> select_incumbent(std::span<const std::uint64_t> collab_counts,
                                         std::span<const AuthorId> exclude, double nu, double k0,
                                         RandomStream& rng);

/// Assemble a team of exactly `team_size` distinct members. Each slot
/// independently flips newcomer (p) vs incumbent (1-p); incumbent slots draw
/// via select_incumbent excluding members already chosen, and degrade to a
/// newcomer when no eligible incumbent remains. Newcomers get a fresh id and
/// a Q-factor and are registered immediately (eligible for later papers, not
/// within this team).
///
/// Draw order per slot: one uniform for the branch; incumbent slots one
/// uniform for the pick; newcomer slots two uniforms for the Q-factor.
TeamDraft assemble_team(int team_size, const AssemblyParams& params, AuthorRegistry& registry,
                        CollaborationMatrix& matrix, std::int32_t month, RandomStream& rng);

/// Paper quality: uniform noise in [1-delta*, 1+delta*] times the team's
/// best Q-factor. Always consumes one uniform.
double paper_quality(std::span<const double> member_q_factors, double noise_halfwidth,
                     RandomStream& rng);

} // namespace vjsim
