#include "vjsim/citation_kernel.hpp"

#include <cassert>

namespace vjsim {

void citation_weights_serial(const CorpusColumns& corpus, std::int32_t t, double theta, double c0,
                             std::span<double> out) {
    assert(corpus.month.size() == out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = citation_weight_unchecked(corpus.quality[i], corpus.cites[i], corpus.month[i], t,
                                           theta, c0);
}

void citation_weights_parallel(const CorpusColumns& corpus, std::int32_t t, double theta, double c0,
                               std::span<double> out) {
    assert(corpus.month.size() == out.size());
    const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            citation_weight_unchecked(corpus.quality[static_cast<std::size_t>(i)],
                                      corpus.cites[static_cast<std::size_t>(i)],
                                      corpus.month[static_cast<std::size_t>(i)], t, theta, c0);
}

} // namespace vjsim
