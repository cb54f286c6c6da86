#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace vjsim {

/// Unnormalized attractiveness of one paper at month t:
///   quality * (received citations + c0) * exp(-(t - pub_month) / theta).
/// Callers guarantee t >= pub_month. theta = +infinity disables aging
/// (the exponent is -0, the factor exactly 1).
inline double citation_weight_unchecked(double quality, std::uint32_t cites,
                                        std::int32_t pub_month, std::int32_t t, double theta,
                                        double c0) {
    const double aging = std::exp(-static_cast<double>(t - pub_month) / theta);
    return quality * (static_cast<double>(cites) + c0) * aging;
}

/// Flat columns of the published corpus, the kernel's input.
struct CorpusColumns {
    std::span<const std::int32_t> month;
    std::span<const double> quality;
    std::span<const std::uint32_t> cites;
};

/// Fill out[i] with the citation weight of paper i at month t.
/// Serial reference implementation.
void citation_weights_serial(const CorpusColumns& corpus, std::int32_t t, double theta, double c0,
                             std::span<double> out);

/// OpenMP variant. Each element is computed independently with the same
/// scalar arithmetic as the serial path, so results are bit-identical for
/// any worker count (falls back to the serial loop without OpenMP).
void citation_weights_parallel(const CorpusColumns& corpus, std::int32_t t, double theta, double c0,
                               std::span<double> out);

} // namespace vjsim
