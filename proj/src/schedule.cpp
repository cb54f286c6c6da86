#include "vjsim/schedule.hpp"

#include "vjsim/errors.hpp"

#include <cmath>

namespace vjsim {

long PublicationSchedule::total_papers() const {
    long total = 0;
    for (const Issue& issue : months)
        total += issue.papers;
    return total;
}

std::vector<long> PublicationSchedule::yearly_totals() const {
    std::vector<long> totals(static_cast<std::size_t>(years()), 0);
    for (const Issue& issue : months)
        totals[static_cast<std::size_t>((issue.month - 1) / issues_per_year)] += issue.papers;
    return totals;
}

PublicationSchedule build_schedule(const SimulationConfig& config) {
    config.validate();
    PublicationSchedule schedule;
    schedule.issues_per_year = config.issues_per_year;
    schedule.months.reserve(static_cast<std::size_t>(config.total_months()));
    int month = 0;
    for (int year = 1; year <= config.years; ++year) {
        const int papers = config.base_papers_per_issue + (year - 1) * config.papers_increment_per_year;
        for (int issue = 0; issue < config.issues_per_year; ++issue)
            schedule.months.push_back({++month, papers});
    }
    return schedule;
}

GrowthFit fit_exponential_growth(std::span<const long> yearly_counts) {
    std::vector<double> t, logn;
    for (std::size_t i = 0; i < yearly_counts.size(); ++i) {
        if (yearly_counts[i] > 0) {
            t.push_back(static_cast<double>(i + 1));
            logn.push_back(std::log(static_cast<double>(yearly_counts[i])));
        }
    }
    if (t.size() < 2)
        throw ConfigError("exponential growth fit needs at least two years with papers");

    double tm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        tm += t[i];
        ym += logn[i];
    }
    tm /= static_cast<double>(t.size());
    ym /= static_cast<double>(t.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        sxy += (t[i] - tm) * (logn[i] - ym);
        sxx += (t[i] - tm) * (t[i] - tm);
    }
    const double slope = sxy / sxx;
    return {std::exp(ym - slope * tm), slope, std::exp(slope) - 1.0};
}

double schedule_growth_rate(const PublicationSchedule& schedule) {
    if (schedule.years() < 2)
        throw ConfigError("schedule_growth_rate needs a schedule spanning at least two years");
    const auto totals = schedule.yearly_totals();
    return fit_exponential_growth(totals).annual_rate;
}

} // namespace vjsim
