#include "vjsim/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vjsim {

double RandomStream::normal(double mu, double sigma) {
    // u1 in (0,1] so the log is finite; u2 in [0,1).
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t RandomStream::below(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("RandomStream::below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

long RandomStream::poisson(double mean) {
    if (mean < 0.0)
        throw std::invalid_argument("RandomStream::poisson: mean must be non-negative");
    if (mean == 0.0)
        return 0;
    if (mean > 500.0) {
        const double x = std::round(normal(mean, std::sqrt(mean)));
        return x > 0.0 ? static_cast<long>(x) : 0;
    }
    const double limit = std::exp(-mean);
    long k = 0;
    double prod = 1.0;
    do {
        ++k;
        prod *= uniform01();
    } while (prod > limit);
    return k - 1;
}

long RandomStream::geometric_failures(double success_prob) {
    if (!(success_prob > 0.0) || success_prob > 1.0)
        throw std::invalid_argument("RandomStream::geometric_failures: p must be in (0,1]");
    if (success_prob == 1.0) {
        uniform01(); // keep one-draw-per-sample consumption
        return 0;
    }
    const double u = 1.0 - uniform01(); // (0,1]
    return static_cast<long>(std::floor(std::log(u) / std::log1p(-success_prob)));
}

AliasTable::AliasTable(std::span<const double> weights) {
    const std::size_t n = weights.size();
    if (n == 0)
        throw std::invalid_argument("AliasTable: empty weight vector");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0))
            throw std::invalid_argument("AliasTable: weights must be non-negative");
        total += w;
    }
    if (!(total > 0.0))
        throw std::invalid_argument("AliasTable: weights must not all be zero");

    prob_.assign(n, 0.0);
    alias_.assign(n, 0);
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i)
        scaled[i] = weights[i] * static_cast<double>(n) / total;

    std::vector<std::uint32_t> small, large;
    small.reserve(n);
    large.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));

    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.back();
        const std::uint32_t l = large.back();
        small.pop_back();
        large.pop_back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] -= 1.0 - scaled[s];
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    // Leftovers are 1 up to rounding.
    for (std::uint32_t i : small)
        prob_[i] = 1.0, alias_[i] = i;
    for (std::uint32_t i : large)
        prob_[i] = 1.0, alias_[i] = i;
}

std::size_t AliasTable::sample(RandomStream& rng) const {
    const double u = rng.uniform01() * static_cast<double>(prob_.size());
    std::size_t i = static_cast<std::size_t>(u);
    if (i >= prob_.size()) // u == size() after rounding
        i = prob_.size() - 1;
    const double coin = u - static_cast<double>(i);
    return coin < prob_[i] ? i : alias_[i];
}

} // namespace vjsim
