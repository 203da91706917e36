#include "rhalton/estimator.hpp"

#include "rhalton/halton.hpp"
#include "rhalton/keyed_rng.hpp"
#include "rhalton/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rhalton {

namespace {

constexpr std::uint64_t kMcStreamTag = 0x4d43'4241'5345'4c4eULL;

void validate(const ReplicationPlan& plan)
{
    if (plan.reps < 2)
        throw std::invalid_argument("replication plan: need at least 2 replicates, got " + std::to_string(plan.reps));
    if (plan.n == 0)
        throw std::invalid_argument("replication plan: n must be >= 1");
    if (plan.d == 0)
        throw std::invalid_argument("replication plan: d must be >= 1");
    if (plan.stride < plan.d)
        throw std::invalid_argument("replication plan: stride " + std::to_string(plan.stride) +
                                    " is smaller than d = " + std::to_string(plan.d));
}

PointFunction wrap(const ReplicationPlan& plan, const Integrand& f)
{
    if (f.dimension() != plan.d)
        throw std::invalid_argument("replication plan: integrand dimension " + std::to_string(f.dimension()) +
                                    " differs from plan d = " + std::to_string(plan.d));
    return [&f](std::span<const double> x) { return f(x); };
}

double block_mean(const PointMatrix& x, const PointFunction& f)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        s += f(x.row(i));
    return s / static_cast<double>(x.rows());
}

}  // namespace

std::uint64_t default_stride(std::uint32_t d)
{
    return std::max<std::uint64_t>(d, 1000);
}

ReplicatedEstimate pool_replicates(std::span<const double> per_replicate)
{
    const std::size_t r = per_replicate.size();
    if (r < 2)
        throw std::invalid_argument("pool_replicates: variance needs at least 2 replicates");
    ReplicatedEstimate out;
    out.per_replicate.assign(per_replicate.begin(), per_replicate.end());
    double s = 0.0;
    for (const double v : per_replicate)
        s += v;
    out.mean = s / static_cast<double>(r);
    double ss = 0.0;
    for (const double v : per_replicate)
        ss += (v - out.mean) * (v - out.mean);
    out.variance_estimate = ss / (static_cast<double>(r) * static_cast<double>(r - 1));
    out.standard_error = std::sqrt(out.variance_estimate);
    return out;
}

ReplicatedEstimate replicate_estimate(const ReplicationPlan& plan, const PointFunction& f)
{
    validate(plan);
    std::vector<double> means(plan.reps);
    parallel_for(plan.reps, [&](std::size_t r) {
        const std::uint64_t seed = plan.base_seed + r * plan.stride;
        means[r] = block_mean(rhalton(plan.n, plan.d, 0, 0, seed), f);
    });
    return pool_replicates(means);
}

ReplicatedEstimate replicate_estimate(const ReplicationPlan& plan, const Integrand& f)
{
    return replicate_estimate(plan, wrap(plan, f));
}

ReplicatedEstimate mc_baseline(const ReplicationPlan& plan, const PointFunction& f, std::uint64_t rng_seed)
{
    validate(plan);
    std::vector<double> means(plan.reps);
    parallel_for(plan.reps, [&](std::size_t r) {
        KeyedGenerator gen(rng_seed, r, kMcStreamTag);
        PointMatrix x(plan.n, plan.d);
        for (std::size_t i = 0; i < plan.n; ++i)
            for (std::size_t j = 0; j < plan.d; ++j)
                x(i, j) = gen.open01();
        means[r] = block_mean(x, f);
    });
    return pool_replicates(means);
}

ReplicatedEstimate mc_baseline(const ReplicationPlan& plan, const Integrand& f, std::uint64_t rng_seed)
{
    return mc_baseline(plan, wrap(plan, f), rng_seed);
}

MseEstimate mse_estimate(std::span<const double> per_replicate, double true_mu)
{
    const std::size_t r = per_replicate.size();
    if (r < 2)
        throw std::invalid_argument("mse_estimate: need at least 2 replicates");
    std::vector<double> sq;
    sq.reserve(r);
    for (const double v : per_replicate)
        sq.push_back((v - true_mu) * (v - true_mu));
    double s = 0.0;
    for (const double e : sq)
        s += e;
    MseEstimate out;
    out.mse = s / static_cast<double>(r);
    double ss = 0.0;
    for (const double e : sq)
        ss += (e - out.mse) * (e - out.mse);
    out.variance = ss / static_cast<double>(r - 1) / static_cast<double>(r);
    return out;
}

EfficiencyReport efficiency_with_bounds(double mse_hat, double sq_err_variance, double sigma2, std::uint64_t n,
                                        std::uint32_t reps)
{
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("efficiency_with_bounds: sigma2 must be positive");
    if (mse_hat < 0.0 || sq_err_variance < 0.0)
        throw std::invalid_argument("efficiency_with_bounds: negative MSE or variance");
    if (n == 0 || reps == 0)
        throw std::invalid_argument("efficiency_with_bounds: n and R must be positive");

    constexpr double inf = std::numeric_limits<double>::infinity();
    const double mc_var = sigma2 / static_cast<double>(n);
    const double half_width = 2.0 * std::sqrt(sq_err_variance / reps);

    EfficiencyReport out;
    out.mse_hat = mse_hat;
    out.mse_variance = sq_err_variance / reps;
    if (mse_hat == 0.0) {
        out.efficiency = inf;
        out.efficiency_unbounded = true;
    } else {
        out.efficiency = mc_var / mse_hat;
    }
    const double lo_den = mse_hat + half_width;
    out.eff_lower = lo_den > 0.0 ? mc_var / lo_den : inf;
    const double hi_den = mse_hat - half_width;
    if (hi_den > 0.0) {
        out.eff_upper = mc_var / hi_den;
    } else {
        out.eff_upper = inf;
        out.upper_unbounded = true;
    }
    return out;
}

EfficiencyReport efficiency_report(std::span<const double> per_replicate, double true_mu, double sigma2,
                                   std::uint64_t n)
{
    const auto m = mse_estimate(per_replicate, true_mu);
    const auto reps = static_cast<std::uint32_t>(per_replicate.size());
    return efficiency_with_bounds(m.mse, m.variance * reps, sigma2, n, reps);
}

std::vector<SweepRow> efficiency_sweep(IntegrandKind kind, std::span<const std::uint32_t> dims,
                                       std::span<const std::uint64_t> ns, std::uint32_t reps,
                                       std::uint64_t base_seed)
{
    std::vector<SweepRow> rows;
    for (const auto d : dims) {
        const Integrand f(kind, d);
        const auto moments = moments_for(f);
        for (const auto n : ns) {
            ReplicationPlan plan{reps, n, d, base_seed, default_stride(d)};
            const auto est = replicate_estimate(plan, f);
            const auto eff = efficiency_report(est.per_replicate, moments.mu, moments.sigma2, n);
            rows.push_back({kind, d, n, eff.mse_hat, std::sqrt(eff.mse_variance), eff.efficiency, eff.eff_lower,
                            eff.eff_upper});
        }
    }
    return rows;
}

}  // namespace rhalton
