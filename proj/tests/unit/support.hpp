#ifndef PTLAB_TESTS_SUPPORT_HPP
#define PTLAB_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ptlab/params.hpp"
#include "ptlab/types.hpp"

namespace testing {

using ptlab::cplx;
using ptlab::ModelParams;
using ptlab::Regime;

inline ModelParams worked()
{
    return ModelParams::make(2.0, 1.0, std::sqrt(5.0));
}

inline ModelParams boundary()
{
    return ModelParams::make(2.0, 1.0, 3.0);
}

inline ModelParams complex_case()
{
    return ModelParams::make(2.0, 1.0, 4.0);
}

/// a1, a2 in [0.3, 3] with |a1 - a2| >= 0.1 and random signs on a3; |a3| is a
/// fraction of |a1^2 - a2^2| chosen to land in the requested regime.
inline ModelParams random_params(std::mt19937_64& rng, Regime regime)
{
    std::uniform_real_distribution<double> side(0.3, 3.0);
    std::uniform_real_distribution<double> below(0.05, 0.95);
    std::uniform_real_distribution<double> above(1.05, 3.0);
    std::bernoulli_distribution flip(0.5);
    for (;;) {
        const double a1 = side(rng);
        const double a2 = side(rng);
        if (std::abs(a1 - a2) < 0.1) continue;
        const double gap = std::abs(a1 * a1 - a2 * a2);
        double a3 = gap;
        if (regime == Regime::CaseI) a3 = below(rng) * gap;
        if (regime == Regime::CaseIII) a3 = above(rng) * gap;
        if (flip(rng)) a3 = -a3;
        const ModelParams p = ModelParams::make(a1, a2, a3);
        if (ptlab::classify(p) == regime) return p;
    }
}

inline std::vector<ModelParams> random_sweep(std::uint64_t seed, Regime regime, int count)
{
    std::mt19937_64 rng(seed);
    std::vector<ModelParams> out;
    for (int i = 0; i < count; ++i) out.push_back(random_params(rng, regime));
    return out;
}

/// `count` triples spread evenly over the three regimes.
inline std::vector<ModelParams> mixed_sweep(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::vector<ModelParams> out;
    const Regime regimes[3] = {Regime::CaseI, Regime::CaseII, Regime::CaseIII};
    for (int i = 0; i < count; ++i) out.push_back(random_params(rng, regimes[i % 3]));
    return out;
}

inline ptlab::Mat4 golden_matrix(const std::array<std::complex<double>, 16>& g)
{
    ptlab::Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = g[static_cast<std::size_t>(4 * i + j)];
    return m;
}

inline double relative_error(cplx got, cplx want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace testing

#endif
