#include "vjsim/config.hpp"

#include "vjsim/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace vjsim {

using nlohmann::json;

double SamplerSpec::interpolated_mean(int year, int years) const {
    if (years <= 1)
        return parametric_mean_first_year;
    const double f = static_cast<double>(year - 1) / static_cast<double>(years - 1);
    return parametric_mean_first_year + f * (parametric_mean_last_year - parametric_mean_first_year);
}

long SimulationConfig::total_papers() const {
    const long y = years;
    return static_cast<long>(issues_per_year) *
           (y * base_papers_per_issue + papers_increment_per_year * y * (y - 1) / 2);
}

namespace {

void validate_sampler(const SamplerSpec& spec, int years, long min_value, const char* name) {
    if (spec.mode == SamplerMode::EmpiricalIntervals) {
        if (static_cast<int>(spec.intervals.size()) != years)
            throw ConfigError(std::string(name) + ": EmpiricalIntervals mode requires exactly " +
                              std::to_string(years) + " histograms, got " +
                              std::to_string(spec.intervals.size()));
        for (std::size_t y = 0; y < spec.intervals.size(); ++y) {
            const auto& hist = spec.intervals[y];
            if (hist.empty())
                throw ConfigError(std::string(name) + ": histogram for year " + std::to_string(y + 1) +
                                  " is empty");
            double sum = 0.0;
            for (const auto& [value, prob] : hist) {
                if (value < min_value)
                    throw ConfigError(std::string(name) + ": histogram value " + std::to_string(value) +
                                      " below minimum " + std::to_string(min_value));
                if (!(prob >= 0.0) || !std::isfinite(prob))
                    throw ConfigError(std::string(name) + ": negative or non-finite probability");
                sum += prob;
            }
            if (std::abs(sum - 1.0) > 1e-9)
                throw ConfigError(std::string(name) + ": histogram for year " + std::to_string(y + 1) +
                                  " sums to " + std::to_string(sum) + ", expected 1");
        }
    } else {
        const double lo = std::min(spec.parametric_mean_first_year, spec.parametric_mean_last_year);
        if (!std::isfinite(spec.parametric_mean_first_year) || !std::isfinite(spec.parametric_mean_last_year))
            throw ConfigError(std::string(name) + ": non-finite parametric mean");
        if (lo < static_cast<double>(min_value))
            throw ConfigError(std::string(name) + ": parametric mean below minimum " +
                              std::to_string(min_value));
    }
}

} // namespace

void SimulationConfig::validate() const {
    if (years < 1 || issues_per_year < 1 || base_papers_per_issue < 1)
        throw ConfigError("years, issues_per_year and base_papers_per_issue must all be >= 1");
    if (papers_increment_per_year < 0)
        throw ConfigError("papers_increment_per_year must be >= 0");
    if (!(newcomer_prob >= 0.0 && newcomer_prob <= 1.0))
        throw ConfigError("newcomer_prob must lie in [0,1]");
    if (!(aging_lifetime_months > 0.0))
        throw ConfigError("aging_lifetime_months must be positive");
    if (!(initial_attractiveness > 0.0))
        throw ConfigError("initial_attractiveness must be positive");
    if (!(initial_connectivity > 0.0))
        throw ConfigError("initial_connectivity must be positive");
    if (!(pa_exponent > 0.0 && pa_exponent <= 1.0))
        throw ConfigError("pa_exponent must lie in (0,1]");
    if (!(q_sigma > 0.0))
        throw ConfigError("q_sigma must be positive");
    if (!std::isfinite(q_mu))
        throw ConfigError("q_mu must be finite");
    if (!(noise_halfwidth >= 0.0 && noise_halfwidth < 1.0))
        throw ConfigError("noise_halfwidth must lie in [0,1)");
    validate_sampler(team_size_sampler, years, 1, "team_size_sampler");
    validate_sampler(reference_sampler, years, 0, "reference_sampler");
}

namespace {

// Mean of a geometric pmf truncated to {1..max_value}, success probability p.
double truncated_geometric_mean(double p, long max_value) {
    const double q = 1.0 - p;
    double norm = 0.0, mean = 0.0, term = p;
    for (long k = 1; k <= max_value; ++k) {
        norm += term;
        mean += static_cast<double>(k) * term;
        term *= q;
    }
    return mean / norm;
}

IntervalHistogram truncated_geometric_histogram(double target_mean, long max_value) {
    // mean is monotone decreasing in p; bisect.
    double lo = 1e-9, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (truncated_geometric_mean(mid, max_value) > target_mean ? lo : hi) = mid;
    }
    const double p = 0.5 * (lo + hi);
    IntervalHistogram hist;
    hist.reserve(static_cast<std::size_t>(max_value));
    double term = p, sum = 0.0;
    for (long k = 1; k <= max_value; ++k) {
        hist.emplace_back(k, term);
        sum += term;
        term *= 1.0 - p;
    }
    for (auto& [value, prob] : hist)
        prob /= sum;
    return hist;
}

// Synthetic stand-in for the APS team-size intervals: per-year means rise
// linearly with slope 0.12, anchored so the schedule-weighted overall mean
// is exactly `overall_mean`.
SamplerSpec synthetic_team_sampler(int years, int issues, int base, int increment,
                                   double overall_mean) {
    constexpr double kSlope = 0.12;
    constexpr long kMaxTeam = 20;

    double total = 0.0, weighted_offset = 0.0;
    for (int t = 1; t <= years; ++t) {
        const double papers = static_cast<double>(issues) * (base + (t - 1) * increment);
        total += papers;
        weighted_offset += papers * kSlope * (t - 1);
    }
    const double anchor = overall_mean - weighted_offset / total;

    SamplerSpec spec;
    spec.mode = SamplerMode::EmpiricalIntervals;
    spec.intervals.reserve(static_cast<std::size_t>(years));
    for (int t = 1; t <= years; ++t) {
        const double mean = anchor + kSlope * (t - 1);
        spec.intervals.push_back(truncated_geometric_histogram(std::max(mean, 1.0), kMaxTeam));
    }
    return spec;
}

SamplerSpec default_reference_sampler() {
    SamplerSpec spec;
    spec.mode = SamplerMode::Parametric;
    spec.parametric_family = ParametricFamily::Poisson;
    spec.parametric_mean_first_year = 4.0;
    spec.parametric_mean_last_year = 16.0;
    return spec;
}

} // namespace

SimulationConfig default_config() {
    SimulationConfig config;
    config.team_size_sampler =
        synthetic_team_sampler(config.years, config.issues_per_year, config.base_papers_per_issue,
                               config.papers_increment_per_year, 3.54);
    config.reference_sampler = default_reference_sampler();
    config.validate();
    return config;
}

namespace {

const char* kModeNames[] = {"empirical_intervals", "parametric"};
const char* kFamilyNames[] = {"shifted_geometric", "poisson", "discrete_power_law_truncated"};

SamplerMode mode_from_string(const std::string& s) {
    if (s == kModeNames[0]) return SamplerMode::EmpiricalIntervals;
    if (s == kModeNames[1]) return SamplerMode::Parametric;
    throw ConfigError("unknown sampler mode '" + s + "'");
}

ParametricFamily family_from_string(const std::string& s) {
    if (s == kFamilyNames[0]) return ParametricFamily::ShiftedGeometric;
    if (s == kFamilyNames[1]) return ParametricFamily::Poisson;
    if (s == kFamilyNames[2]) return ParametricFamily::DiscretePowerLawTruncated;
    throw ConfigError("unknown parametric family '" + s + "'");
}

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& item : object.items())
        if (!known.contains(item.key()))
            throw ConfigError("unknown key '" + item.key() + "' in " + where);
}

double get_number(const json& object, const char* key, double fallback) {
    if (!object.contains(key))
        return fallback;
    const json& v = object.at(key);
    if (!v.is_number())
        throw ConfigError(std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

int get_int(const json& object, const char* key, int fallback) {
    if (!object.contains(key))
        return fallback;
    const json& v = object.at(key);
    if (!v.is_number_integer())
        throw ConfigError(std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

bool get_bool(const json& object, const char* key, bool fallback) {
    if (!object.contains(key))
        return fallback;
    const json& v = object.at(key);
    if (!v.is_boolean())
        throw ConfigError(std::string("key '") + key + "' must be a boolean");
    return v.get<bool>();
}

SamplerSpec sampler_from_json(const json& object, const std::string& where) {
    if (!object.is_object())
        throw ConfigError(where + " must be an object");
    reject_unknown_keys(object,
                        {"mode", "intervals", "parametric_family", "parametric_mean_first_year",
                         "parametric_mean_last_year"},
                        where);
    SamplerSpec spec;
    if (!object.contains("mode"))
        throw ConfigError(where + ": missing 'mode'");
    spec.mode = mode_from_string(object.at("mode").get<std::string>());
    if (spec.mode == SamplerMode::EmpiricalIntervals) {
        if (!object.contains("intervals"))
            throw ConfigError(where + ": EmpiricalIntervals mode requires 'intervals'");
        const json& years = object.at("intervals");
        if (!years.is_array())
            throw ConfigError(where + ": 'intervals' must be an array of histograms");
        for (const json& hist : years) {
            if (!hist.is_array())
                throw ConfigError(where + ": each histogram must be an array of [value, probability] pairs");
            IntervalHistogram parsed;
            for (const json& pair : hist) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                    !pair[1].is_number())
                    throw ConfigError(where + ": histogram entries must be [integer value, probability]");
                parsed.emplace_back(pair[0].get<long>(), pair[1].get<double>());
            }
            spec.intervals.push_back(std::move(parsed));
        }
    } else {
        if (object.contains("parametric_family"))
            spec.parametric_family = family_from_string(object.at("parametric_family").get<std::string>());
        spec.parametric_mean_first_year = get_number(object, "parametric_mean_first_year", 1.0);
        spec.parametric_mean_last_year =
            get_number(object, "parametric_mean_last_year", spec.parametric_mean_first_year);
    }
    return spec;
}

json sampler_to_json(const SamplerSpec& spec) {
    json object;
    object["mode"] = to_string(spec.mode);
    if (spec.mode == SamplerMode::EmpiricalIntervals) {
        json years = json::array();
        for (const auto& hist : spec.intervals) {
            json entries = json::array();
            for (const auto& [value, prob] : hist)
                entries.push_back(json::array({value, prob}));
            years.push_back(std::move(entries));
        }
        object["intervals"] = std::move(years);
    } else {
        object["parametric_family"] = to_string(spec.parametric_family);
        object["parametric_mean_first_year"] = spec.parametric_mean_first_year;
        object["parametric_mean_last_year"] = spec.parametric_mean_last_year;
    }
    return object;
}

} // namespace

const char* to_string(SamplerMode mode) { return kModeNames[static_cast<int>(mode)]; }
const char* to_string(ParametricFamily family) { return kFamilyNames[static_cast<int>(family)]; }

SimulationConfig config_from_json_text(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!document.is_object())
        throw ConfigError("config document must be a JSON object");

    reject_unknown_keys(document,
                        {"years", "issues_per_year", "base_papers_per_issue",
                         "papers_increment_per_year", "team_size_sampler", "reference_sampler",
                         "newcomer_prob", "aging_lifetime_months", "initial_attractiveness",
                         "initial_connectivity", "pa_exponent", "q_mu", "q_sigma",
                         "noise_halfwidth", "seed", "allow_same_issue_citation",
                         "include_zero_h_in_average", "use_parallel_kernel"},
                        "config");

    SimulationConfig config;
    config.years = get_int(document, "years", config.years);
    config.issues_per_year = get_int(document, "issues_per_year", config.issues_per_year);
    config.base_papers_per_issue =
        get_int(document, "base_papers_per_issue", config.base_papers_per_issue);
    config.papers_increment_per_year =
        get_int(document, "papers_increment_per_year", config.papers_increment_per_year);
    config.newcomer_prob = get_number(document, "newcomer_prob", config.newcomer_prob);
    config.aging_lifetime_months =
        get_number(document, "aging_lifetime_months", config.aging_lifetime_months);
    config.initial_attractiveness =
        get_number(document, "initial_attractiveness", config.initial_attractiveness);
    config.initial_connectivity =
        get_number(document, "initial_connectivity", config.initial_connectivity);
    config.pa_exponent = get_number(document, "pa_exponent", config.pa_exponent);
    config.q_mu = get_number(document, "q_mu", config.q_mu);
    config.q_sigma = get_number(document, "q_sigma", config.q_sigma);
    config.noise_halfwidth = get_number(document, "noise_halfwidth", config.noise_halfwidth);
    config.allow_same_issue_citation =
        get_bool(document, "allow_same_issue_citation", config.allow_same_issue_citation);
    config.include_zero_h_in_average =
        get_bool(document, "include_zero_h_in_average", config.include_zero_h_in_average);
    config.use_parallel_kernel = get_bool(document, "use_parallel_kernel", config.use_parallel_kernel);

    if (document.contains("seed")) {
        const json& v = document.at("seed");
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0))
            throw ConfigError("key 'seed' must be a non-negative integer");
        config.seed = v.get<std::uint64_t>();
    }

    if (document.contains("team_size_sampler"))
        config.team_size_sampler = sampler_from_json(document.at("team_size_sampler"), "team_size_sampler");
    else
        config.team_size_sampler =
            synthetic_team_sampler(config.years, config.issues_per_year, config.base_papers_per_issue,
                                   config.papers_increment_per_year, 3.54);
    if (document.contains("reference_sampler"))
        config.reference_sampler = sampler_from_json(document.at("reference_sampler"), "reference_sampler");
    else
        config.reference_sampler = default_reference_sampler();

    config.validate();
    return config;
}

SimulationConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ConfigError("cannot open config file: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return config_from_json_text(buffer.str());
}

std::string config_to_json_text(const SimulationConfig& config) {
    json document;
    document["years"] = config.years;
    document["issues_per_year"] = config.issues_per_year;
    document["base_papers_per_issue"] = config.base_papers_per_issue;
    document["papers_increment_per_year"] = config.papers_increment_per_year;
    document["team_size_sampler"] = sampler_to_json(config.team_size_sampler);
    document["reference_sampler"] = sampler_to_json(config.reference_sampler);
    document["newcomer_prob"] = config.newcomer_prob;
    document["aging_lifetime_months"] = config.aging_lifetime_months;
    document["initial_attractiveness"] = config.initial_attractiveness;
    document["initial_connectivity"] = config.initial_connectivity;
    document["pa_exponent"] = config.pa_exponent;
    document["q_mu"] = config.q_mu;
    document["q_sigma"] = config.q_sigma;
    document["noise_halfwidth"] = config.noise_halfwidth;
    document["seed"] = config.seed;
    document["allow_same_issue_citation"] = config.allow_same_issue_citation;
    document["include_zero_h_in_average"] = config.include_zero_h_in_average;
    document["use_parallel_kernel"] = config.use_parallel_kernel;
    return document.dump(2) + "\n";
}

} // namespace vjsim
