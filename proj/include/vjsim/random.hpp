#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace vjsim {

/// Deterministic random stream for one simulation run.
///
/// All stochastic draws of a run go through one RandomStream, consumed
/// sequentially. Every primitive is hand-rolled on top of mt19937_64 so
/// the draw sequence is fixed by this code alone (not by the standard
/// library's unspecified distribution algorithms): same seed, same
/// sequence, on any platform. Parallel code must never touch the stream;
/// that is what makes ledgers independent of the worker count.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0,1), 53-bit resolution, one engine draw.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [a,b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Gaussian via Box-Muller. Always consumes exactly two engine draws
    /// (the second Box-Muller variate is discarded rather than cached).
    double normal(double mu, double sigma);

    /// Unbiased integer in [0,n); n must be positive. Rejection on the
    /// top of the 64-bit range, so consumption is data-dependent but
    /// still a pure function of the stream position.
    std::uint64_t below(std::uint64_t n);

    /// Poisson draw. Knuth's product method for small means, a clamped
    /// rounded Gaussian above mean 500 where the product method would
    /// take O(mean) draws per sample.
    long poisson(double mean);

    /// Geometric number of failures before the first success, mean (1-p)/p.
    /// Inverse transform, one uniform per draw.
    long geometric_failures(double success_prob);

private:
    std::mt19937_64 engine_;
};

/// Walker alias table over {0..n-1} for O(1) draws from a fixed discrete
/// distribution. One uniform per draw (split into column index and coin).
class AliasTable {
public:
    AliasTable() = default;
    explicit AliasTable(std::span<const double> weights);

    std::size_t size() const { return prob_.size(); }
    bool empty() const { return prob_.empty(); }

    std::size_t sample(RandomStream& rng) const;

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

} // namespace vjsim
