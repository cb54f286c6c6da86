#include "vjsim/samplers.hpp"

#include "vjsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vjsim {

namespace {

constexpr long kPowerLawCutoff = 10000;

// Mean of P(x) proportional to x^-alpha on {1..cutoff}.
double power_law_mean(double alpha, long cutoff) {
    double norm = 0.0, mean = 0.0;
    for (long x = 1; x <= cutoff; ++x) {
        const double w = std::pow(static_cast<double>(x), -alpha);
        norm += w;
        mean += static_cast<double>(x) * w;
    }
    return mean / norm;
}

// Solve for the exponent matching a target mean; monotone decreasing in alpha.
double solve_power_law_exponent(double target_mean, long cutoff) {
    double lo = 0.0, hi = 25.0;
    if (target_mean >= power_law_mean(lo, cutoff) || target_mean <= power_law_mean(hi, cutoff))
        throw ConfigError("discrete_power_law_truncated cannot reach mean " +
                          std::to_string(target_mean) + " on support {1.." +
                          std::to_string(cutoff) + "}");
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (power_law_mean(mid, cutoff) > target_mean ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

CountSampler::CountSampler(const SamplerSpec& spec, int years, long min_value)
    : mode_(spec.mode), family_(spec.parametric_family), years_(years), min_value_(min_value) {
    if (years < 1)
        throw ConfigError("CountSampler: years must be >= 1");

    if (mode_ == SamplerMode::EmpiricalIntervals) {
        if (static_cast<int>(spec.intervals.size()) != years)
            throw ConfigError("CountSampler: expected " + std::to_string(years) +
                              " interval histograms, got " + std::to_string(spec.intervals.size()));
        tables_.reserve(spec.intervals.size());
        for (const IntervalHistogram& hist : spec.intervals) {
            YearTable table;
            std::vector<double> probs;
            double mean = 0.0, sum = 0.0;
            for (const auto& [value, prob] : hist) {
                if (value < min_value)
                    throw ConfigError("CountSampler: histogram value below minimum");
                table.values.push_back(value);
                probs.push_back(prob);
                mean += static_cast<double>(value) * prob;
                sum += prob;
            }
            if (std::abs(sum - 1.0) > 1e-9)
                throw ConfigError("CountSampler: histogram probabilities must sum to 1");
            table.mean = mean;
            table.alias = AliasTable(probs);
            tables_.push_back(std::move(table));
        }
        return;
    }

    target_means_.reserve(static_cast<std::size_t>(years));
    for (int year = 1; year <= years; ++year) {
        const double mean = spec.interpolated_mean(year, years);
        if (mean < static_cast<double>(min_value))
            throw ConfigError("CountSampler: parametric mean " + std::to_string(mean) +
                              " below minimum " + std::to_string(min_value) + " in year " +
                              std::to_string(year));
        target_means_.push_back(mean);
    }

    switch (family_) {
    case ParametricFamily::ShiftedGeometric: {
        // Support {start, start+1, ...} with start = max(min_value, 1);
        // value = start + failures, so p = 1 / (1 + mean - start).
        const double start = static_cast<double>(std::max(min_value_, 1L));
        tables_.resize(static_cast<std::size_t>(years));
        for (int y = 0; y < years; ++y) {
            const double mean = target_means_[static_cast<std::size_t>(y)];
            if (mean < start)
                throw ConfigError("shifted_geometric needs mean >= " + std::to_string(start));
            tables_[static_cast<std::size_t>(y)].geometric_p = 1.0 / (1.0 + mean - start);
            tables_[static_cast<std::size_t>(y)].mean = mean;
        }
        break;
    }
    case ParametricFamily::Poisson:
        break; // closed-form draw, nothing to precompute
    case ParametricFamily::DiscretePowerLawTruncated: {
        tables_.resize(static_cast<std::size_t>(years));
        for (int y = 0; y < years; ++y) {
            YearTable& table = tables_[static_cast<std::size_t>(y)];
            const double alpha = solve_power_law_exponent(target_means_[static_cast<std::size_t>(y)],
                                                          kPowerLawCutoff);
            table.cdf.resize(static_cast<std::size_t>(kPowerLawCutoff));
            double norm = 0.0, mean = 0.0;
            for (long x = 1; x <= kPowerLawCutoff; ++x) {
                const double w = std::pow(static_cast<double>(x), -alpha);
                norm += w;
                mean += static_cast<double>(x) * w;
                table.cdf[static_cast<std::size_t>(x - 1)] = norm;
            }
            for (double& c : table.cdf)
                c /= norm;
            table.mean = mean / norm;
        }
        break;
    }
    }
}

void CountSampler::check_year(int year) const {
    if (year < 1 || year > years_)
        throw ConfigError("CountSampler: year " + std::to_string(year) + " outside 1.." +
                          std::to_string(years_));
}

long CountSampler::sample(int year, RandomStream& rng) const {
    check_year(year);
    const std::size_t y = static_cast<std::size_t>(year - 1);

    if (mode_ == SamplerMode::EmpiricalIntervals) {
        const YearTable& table = tables_[y];
        return table.values[table.alias.sample(rng)];
    }

    switch (family_) {
    case ParametricFamily::ShiftedGeometric: {
        const long start = std::max(min_value_, 1L);
        return start + rng.geometric_failures(tables_[y].geometric_p);
    }
    case ParametricFamily::Poisson: {
        const double mean = target_means_[y];
        if (min_value_ >= 1)
            return min_value_ + rng.poisson(mean - static_cast<double>(min_value_));
        return rng.poisson(mean);
    }
    case ParametricFamily::DiscretePowerLawTruncated: {
        const auto& cdf = tables_[y].cdf;
        const double u = rng.uniform01();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        return 1 + static_cast<long>(it - cdf.begin());
    }
    }
    throw InternalError("CountSampler: unreachable family");
}

double CountSampler::year_mean(int year) const {
    check_year(year);
    const std::size_t y = static_cast<std::size_t>(year - 1);
    if (mode_ == SamplerMode::EmpiricalIntervals ||
        family_ == ParametricFamily::DiscretePowerLawTruncated)
        return tables_[y].mean;
    return target_means_[y];
}

} // namespace vjsim
