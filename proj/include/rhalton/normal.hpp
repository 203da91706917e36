#pragma once

namespace rhalton {

// Standard normal CDF via erfc, accurate in both tails. NaN input returns NaN
// and sets errno to EDOM.
double norm_cdf(double z);

// Standard normal density.
double norm_pdf(double z);

// Inverse of norm_cdf on (0, 1). Acklam's rational approximation followed by
// one Halley step against norm_cdf; relative error is near machine precision.
// Throws std::domain_error outside the open unit interval.
double norm_quantile(double u);

}  // namespace rhalton
