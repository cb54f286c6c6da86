#pragma once

#include "vjsim/config.hpp"

#include <span>
#include <vector>

namespace vjsim {

/// Deterministic publication schedule: month index (1-based, no gaps) and
/// how many papers that issue publishes. One issue per month; all papers
/// of an issue appear simultaneously at that month index.
struct PublicationSchedule {
    struct Issue {
        int month;
        int papers;
    };
    std::vector<Issue> months;
    int issues_per_year = 12;

    int years() const { return static_cast<int>(months.size()) / issues_per_year; }
    long total_papers() const;
    /// Papers published per year, year index 1..years.
    std::vector<long> yearly_totals() const;
};

PublicationSchedule build_schedule(const SimulationConfig& config);

/// Exponential growth fit of a yearly count series n_t ~ alpha * exp(slope * t),
/// by ordinary least squares on (t, log n_t); years with zero counts are
/// skipped. annual_rate = exp(slope) - 1 is the per-year relative growth.
struct GrowthFit {
    double alpha;
    double slope;
    double annual_rate;
};

/// Throws ConfigError when fewer than two positive-count years are available.
GrowthFit fit_exponential_growth(std::span<const long> yearly_counts);

/// Annual growth rate of the schedule's per-year paper output
/// (defaults: 0.0668). Requires a schedule spanning at least two years.
double schedule_growth_rate(const PublicationSchedule& schedule);

} // namespace vjsim
