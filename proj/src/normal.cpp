#include "rhalton/normal.hpp"

#include <cerrno>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rhalton {

namespace {

constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
constexpr double kSqrt2Pi = 2.50662827463100050241576528481;
constexpr double kInvSqrt2 = 0.707106781186547524400844362105;

// Quantile for 0 < q <= 1/2, where Phi(x) - q can be formed without cancellation.
double lower_quantile(double q)
{
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double low = 0.02425;

    double x;
    if (q < low) {
        const double t = std::sqrt(-2.0 * std::log(q));
        x = (((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) /
            ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1.0);
    } else {
        const double s = q - 0.5;
        const double r = s * s;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * s /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }

    // Halley refinement
    const double e = 0.5 * std::erfc(-x * kInvSqrt2) - q;
    const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    if (!std::isfinite(u))
        return x;
    return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace

double norm_cdf(double z)
{
    if (std::isnan(z)) {
        errno = EDOM;
        return std::numeric_limits<double>::quiet_NaN();
    }
    return 0.5 * std::erfc(-z * kInvSqrt2);
}

double norm_pdf(double z)
{
    // z*z split into its rounded value and the rounding error
    const double zz = z * z;
    const double err = std::fma(z, z, -zz);
    return kInvSqrt2Pi * std::exp(-0.5 * zz) * std::exp(-0.5 * err);
}

double norm_quantile(double u)
{
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("norm_quantile: argument must lie in (0, 1), got " + std::to_string(u));
    if (u == 0.5)
        return 0.0;
    // 1 - u is exact for u in [1/2, 1)
    if (u > 0.5)
        return -lower_quantile(1.0 - u);
    return lower_quantile(u);
}

}  // namespace rhalton
