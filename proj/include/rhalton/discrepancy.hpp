#pragma once

#include "rhalton/halton.hpp"

#include <span>
#include <vector>

namespace rhalton {

// Fraction of points in [0, anchor] (componentwise <=) minus the box volume.
double local_discrepancy(const PointMatrix& points, std::span<const double> anchor);

// Exact one-dimensional star discrepancy:
//   max_i max(i/n - x_(i), x_(i) - (i-1)/n)  over the sorted values.
double star_discrepancy_1d(std::vector<double> values);

inline constexpr std::size_t kBruteForceMaxPoints = 512;
inline constexpr std::size_t kBruteForceMaxDim = 3;

// Star discrepancy for d <= 3 and n <= 512. Anchors range over the grid whose
// coordinates are point coordinates or 1; at each anchor both the closed box
// (count with <=) and the limit of boxes approaching it from below (count
// with <) are scored. Cost O(n^(d+1)).
double star_discrepancy_bruteforce(const PointMatrix& points);

}  // namespace rhalton
