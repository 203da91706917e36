#include "rhalton/mean_dimension.hpp"

#include "rhalton/estimator.hpp"
#include "rhalton/halton.hpp"
#include "rhalton/normal.hpp"
#include "rhalton/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rhalton {

namespace {

constexpr std::uint64_t kSeedStride = 1000;

}  // namespace

NumeratorEstimate numerator_estimate(const std::function<double(double)>& g, std::uint64_t d, std::uint64_t n,
                                     std::uint32_t reps, std::uint64_t seed, DifferenceColumns columns)
{
    if (d == 0)
        throw std::invalid_argument("numerator_estimate: d must be >= 1");
    if (n < 1000)
        throw std::invalid_argument("numerator_estimate: n must be >= 1000, got " + std::to_string(n));
    if (reps < 2)
        throw std::invalid_argument("numerator_estimate: need at least 2 replicates");

    const double dd = static_cast<double>(d);
    const double scale0 = std::sqrt((dd - 1.0) / dd);
    const double scale12 = 1.0 / std::sqrt(dd);
    const std::size_t c1 = columns == DifferenceColumns::standard ? 1 : 2;
    const std::size_t c2 = columns == DifferenceColumns::standard ? 2 : 1;

    std::vector<double> means(reps);
    parallel_for(reps, [&](std::size_t r) {
        const auto x = rhalton(n, 3, 0, 0, seed + r * kSeedStride);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double y0 = d == 1 ? 0.0 : scale0 * norm_quantile(x(i, 0));
            const double y1 = scale12 * norm_quantile(x(i, c1));
            const double y2 = scale12 * norm_quantile(x(i, c2));
            const double diff = g(y0 + y1) - g(y0 + y2);
            s += diff * diff;
        }
        means[r] = 0.5 * dd * s / static_cast<double>(n);
    });

    const auto pooled = pool_replicates(means);
    return {pooled.mean, pooled.standard_error, pooled.per_replicate};
}

NumeratorEstimate numerator_estimate(IntegrandKind kind, std::uint64_t d, std::uint64_t n, std::uint32_t reps,
                                     std::uint64_t seed)
{
    if (!is_gaussian_kind(kind))
        throw std::invalid_argument("numerator_estimate: sumsq is not a function of a Gaussian sum");
    return numerator_estimate([kind](double z) { return link(kind, z); }, d, n, reps, seed);
}

MeanDimensionResult mean_dimension(IntegrandKind kind, std::uint64_t d, std::uint64_t n, std::uint32_t reps,
                                   std::uint64_t seed)
{
    const auto moments = reference_moments(kind);
    if (!(moments.sigma2 > 0.0))
        throw std::domain_error("mean_dimension: integrand has zero variance, mean dimension undefined");
    const auto num = numerator_estimate(kind, d, n, reps, seed);
    MeanDimensionResult out;
    out.d = d;
    out.numerator = num.value;
    out.sigma2 = moments.sigma2;
    out.dbar = num.value / moments.sigma2;
    out.n_points = n;
    out.reps = reps;
    out.standard_error = num.standard_error / moments.sigma2;
    return out;
}

double large_d_limit(IntegrandKind kind, std::uint64_t nodes)
{
    std::function<double(double)> deriv_sq;
    switch (kind) {
    case IntegrandKind::g1:
        deriv_sq = [](double z) {
            const double p = norm_pdf(z + 1.0);
            return p * p;
        };
        break;
    case IntegrandKind::g3:
        deriv_sq = [](double z) { return z > -1.0 ? 1.0 : 0.0; };
        break;
    default:
        throw std::invalid_argument("large_d_limit: " + std::string(to_string(kind)) +
                                    " has no square-integrable derivative; only g1 and g3 are supported");
    }
    const double numerator = gaussian_midpoint_mean(deriv_sq, nodes);
    return numerator / reference_moments(kind).sigma2;
}

}  // namespace rhalton
