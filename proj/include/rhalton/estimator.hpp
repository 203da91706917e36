#pragma once

#include "rhalton/integrands.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rhalton {

using PointFunction = std::function<double(std::span<const double>)>;

// R replicates of n points in d dimensions. Replicate r = 0 .. R-1 draws its
// block with single seed base_seed + r * stride, so stride >= d keeps the
// column seeds of different replicates disjoint.
struct ReplicationPlan {
    std::uint32_t reps = 10;
    std::uint64_t n = 0;
    std::uint32_t d = 0;
    std::uint64_t base_seed = 0;
    std::uint64_t stride = 1000;
};

// max(d, 1000)
std::uint64_t default_stride(std::uint32_t d);

struct ReplicatedEstimate {
    std::vector<double> per_replicate;
    double mean = 0.0;
    // sum_r (mu_r - mean)^2 / (R (R - 1))
    double variance_estimate = 0.0;
    double standard_error = 0.0;
};

// Pools replicate means; needs at least two of them.
ReplicatedEstimate pool_replicates(std::span<const double> per_replicate);

ReplicatedEstimate replicate_estimate(const ReplicationPlan& plan, const Integrand& f);
ReplicatedEstimate replicate_estimate(const ReplicationPlan& plan, const PointFunction& f);

// Same pipeline with independent uniforms from KeyedGenerator(rng_seed, r, tag).
ReplicatedEstimate mc_baseline(const ReplicationPlan& plan, const Integrand& f, std::uint64_t rng_seed);
ReplicatedEstimate mc_baseline(const ReplicationPlan& plan, const PointFunction& f, std::uint64_t rng_seed);

struct MseEstimate {
    double mse = 0.0;
    // Sample variance of the squared errors divided by R.
    double variance = 0.0;
};

MseEstimate mse_estimate(std::span<const double> per_replicate, double true_mu);

struct EfficiencyReport {
    double mse_hat = 0.0;
    double mse_variance = 0.0;
    double efficiency = 0.0;
    double eff_lower = 0.0;
    double eff_upper = 0.0;
    // mse_hat == 0
    bool efficiency_unbounded = false;
    // mse_hat - 2 sqrt(sq_err_variance / R) <= 0
    bool upper_unbounded = false;
};

// Efficiency (sigma2 / n) / mse_hat with limits
//   (sigma2 / n) / (mse_hat +- 2 sqrt(sq_err_variance / R)),
// where sq_err_variance is the sample variance of the R squared errors.
// Unbounded values are +inf with the matching flag set.
EfficiencyReport efficiency_with_bounds(double mse_hat, double sq_err_variance, double sigma2, std::uint64_t n,
                                        std::uint32_t reps);

// mse_estimate followed by efficiency_with_bounds.
EfficiencyReport efficiency_report(std::span<const double> per_replicate, double true_mu, double sigma2,
                                   std::uint64_t n);

struct SweepRow {
    IntegrandKind kind;
    std::uint32_t d;
    std::uint64_t n;
    double mse;
    double mse_se;
    double eff;
    double eff_lo;
    double eff_hi;
};

// One RQMC efficiency row per (d, n), dimensions outermost. Each cell uses
// base_seed and stride default_stride(d).
std::vector<SweepRow> efficiency_sweep(IntegrandKind kind, std::span<const std::uint32_t> dims,
                                       std::span<const std::uint64_t> ns, std::uint32_t reps,
                                       std::uint64_t base_seed);

}  // namespace rhalton
