#pragma once

#include "vjsim/config.hpp"
#include "vjsim/random.hpp"

#include <vector>

namespace vjsim {

/// Draws per-paper integer counts (team sizes or reference counts) for a
/// given simulation year, per a SamplerSpec. Build once per run: empirical
/// histograms become alias tables, the truncated power law a CDF table.
///
/// min_value is 1 for team sizes and 0 for reference counts. Families with
/// support above min_value are shifted (Poisson team sizes draw
/// 1 + Pois(mean-1)); the geometric and power-law families natively start
/// at max(min_value, 1).
class CountSampler {
public:
    CountSampler(const SamplerSpec& spec, int years, long min_value);

    long sample(int year, RandomStream& rng) const;

    /// Exact mean of the year's distribution (empirical histograms and the
    /// power-law table) or the interpolated target mean (closed-form families).
    double year_mean(int year) const;

    int years() const { return years_; }

private:
    struct YearTable {
        std::vector<long> values; // empirical values or power-law support
        AliasTable alias;         // empirical mode
        std::vector<double> cdf;  // power-law mode
        double mean = 0.0;
        double geometric_p = 0.0; // shifted-geometric mode
    };

    void check_year(int year) const;

    SamplerMode mode_;
    ParametricFamily family_ = ParametricFamily::Poisson;
    int years_;
    long min_value_;
    std::vector<YearTable> tables_;
    std::vector<double> target_means_;
};

} // namespace vjsim
