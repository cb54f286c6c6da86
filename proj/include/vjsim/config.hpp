#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace vjsim {

/// One year's discrete histogram: (value, probability) pairs.
using IntervalHistogram = std::vector<std::pair<long, double>>;

enum class SamplerMode { EmpiricalIntervals, Parametric };
enum class ParametricFamily { ShiftedGeometric, Poisson, DiscretePowerLawTruncated };

/// How one per-paper count (team size or reference count) is drawn.
/// EmpiricalIntervals carries one histogram per simulated year; Parametric
/// interpolates a per-year mean linearly between the first- and last-year
/// values and draws from the chosen family.
struct SamplerSpec {
    SamplerMode mode = SamplerMode::Parametric;
    std::vector<IntervalHistogram> intervals;
    ParametricFamily parametric_family = ParametricFamily::Poisson;
    double parametric_mean_first_year = 1.0;
    double parametric_mean_last_year = 1.0;

    double interpolated_mean(int year, int years) const;
};

/// Every free parameter of the model. Validated as a whole by validate().
struct SimulationConfig {
    int years = 13;
    int issues_per_year = 12;
    int base_papers_per_issue = 10;
    int papers_increment_per_year = 1;

    SamplerSpec team_size_sampler;  // default: 13 synthetic interval histograms, overall mean 3.54
    SamplerSpec reference_sampler;  // default: Poisson, mean 4 -> 16

    double newcomer_prob = 0.192;       // p
    double aging_lifetime_months = 48;  // theta
    double initial_attractiveness = 1;  // c0, for papers with no citations yet
    double initial_connectivity = 1;    // k0, for authors with no collaborations yet
    double pa_exponent = 1;             // nu in the incumbent-selection weight k^nu

    double q_mu = 0.93;
    double q_sigma = 0.46;
    double noise_halfwidth = 0.1; // delta*, quality noise uniform in [1-d*, 1+d*]

    std::uint64_t seed = 1;

    bool allow_same_issue_citation = true;
    bool include_zero_h_in_average = true;
    bool use_parallel_kernel = true;

    int total_months() const { return years * issues_per_year; }
    long total_papers() const;

    /// Throws ConfigError on any invariant violation.
    void validate() const;
};

/// Defaults as above, with the synthetic APS-like team-size histograms
/// filled in (per-year means rising 2.715 -> 4.155; schedule-weighted
/// overall mean exactly 3.54).
SimulationConfig default_config();

/// Flat JSON document <-> config. Unknown keys are rejected; missing keys
/// keep their defaults. Histograms are arrays of [value, probability] pairs.
SimulationConfig config_from_json_text(const std::string& text);
SimulationConfig load_config(const std::filesystem::path& file);
std::string config_to_json_text(const SimulationConfig& config);

const char* to_string(SamplerMode mode);
const char* to_string(ParametricFamily family);

} // namespace vjsim
