#pragma once

#include "rhalton/integrands.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rhalton {

// Mean dimension of f(x) = g(d^{-1/2} sum_j PhiInv(x_j)) through the Sobol'
// identity
//   sum_u |u| sigma_u^2 = (d/2) E[(g(y0 + y1) - g(y0 + y2))^2],
//   y1, y2 ~ N(0, 1/d), y0 ~ N(0, (d-1)/d), all independent,
// which is a 3-dimensional integral whatever d is. It is estimated from
// replicated 3-column scrambled Halton blocks: column 1 drives y0, column 2
// drives y1 and column 3 drives y2 (swapped when requested). Replicate r uses
// single seed seed + 1000 r.

inline constexpr std::uint64_t kDefaultMeanDimPoints = 1 << 14;
inline constexpr std::uint32_t kDefaultMeanDimReps = 10;

enum class DifferenceColumns { standard, swapped };

struct NumeratorEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    std::vector<double> per_replicate;
};

NumeratorEstimate numerator_estimate(const std::function<double(double)>& g, std::uint64_t d, std::uint64_t n,
                                     std::uint32_t reps, std::uint64_t seed,
                                     DifferenceColumns columns = DifferenceColumns::standard);
NumeratorEstimate numerator_estimate(IntegrandKind kind, std::uint64_t d, std::uint64_t n, std::uint32_t reps,
                                     std::uint64_t seed);

struct MeanDimensionResult {
    std::uint64_t d = 0;
    double numerator = 0.0;
    double sigma2 = 0.0;
    double dbar = 0.0;
    std::uint64_t n_points = 0;
    std::uint32_t reps = 0;
    // Of dbar; sigma2 is treated as exact.
    double standard_error = 0.0;
};

// Throws std::domain_error when sigma2 is zero.
MeanDimensionResult mean_dimension(IntegrandKind kind, std::uint64_t d, std::uint64_t n = kDefaultMeanDimPoints,
                                   std::uint32_t reps = kDefaultMeanDimReps, std::uint64_t seed = 0);

// d -> infinity limit  int g'(z)^2 phi(z) dz / sigma2, for g1 and g3 only.
// The numerator comes from the midpoint rule with `nodes` nodes.
double large_d_limit(IntegrandKind kind, std::uint64_t nodes = kDefaultMomentNodes);

}  // namespace rhalton
