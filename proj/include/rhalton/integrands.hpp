#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace rhalton {

// g1..g4 act on z = d^{-1/2} sum_j PhiInv(x_j), which is N(0,1) under uniform x:
//   g1(z) = Phi(z + 1)        smooth
//   g2(z) = 1{z + 1 >= 0}     jump at z = -1 (the boundary counts as 1)
//   g3(z) = max(z + 1, 0)     kink
//   g4(z) = 1{z < PhiInv(0.001)}  rare event
// sumsq is (sum_j x_j)^2 on [0,1]^d.
enum class IntegrandKind { g1, g2, g3, g4, sumsq };

std::string_view to_string(IntegrandKind kind);
// Accepts "g1".."g4", "f1".."f4" and "sumsq". Throws std::invalid_argument.
IntegrandKind parse_integrand_kind(std::string_view name);

bool is_gaussian_kind(IntegrandKind kind);

// g applied to a scalar z; throws for sumsq.
double link(IntegrandKind kind, double z);

// PhiInv(0.001), the g4 threshold.
double rare_event_threshold();

class Integrand {
public:
    Integrand(IntegrandKind kind, std::uint32_t dimension);

    IntegrandKind kind() const { return kind_; }
    std::uint32_t dimension() const { return dim_; }

    // Throws std::invalid_argument on a length mismatch and std::domain_error
    // when a Gaussian kind sees a coordinate outside (0, 1).
    double operator()(std::span<const double> x) const;

private:
    IntegrandKind kind_;
    std::uint32_t dim_;
};

double evaluate(const Integrand& f, std::span<const double> x);

struct ReferenceMoments {
    double mu = 0.0;
    double sigma2 = 0.0;
    // Midpoint nodes used; 0 for closed-form values.
    std::uint64_t resolution = 0;
};

inline constexpr std::uint64_t kDefaultMomentNodes = 10'000'000;

// E h(z) for z ~ N(0,1) by the midpoint rule on m nodes of [0,1] mapped
// through PhiInv, with compensated summation.
double gaussian_midpoint_mean(const std::function<double(double)>& h, std::uint64_t m);

// Mean and variance of g(z), z ~ N(0,1), for a Gaussian kind. Results at the
// default resolution are computed once per process and reused. m >= 1000.
ReferenceMoments reference_moments(IntegrandKind kind, std::uint64_t m = kDefaultMomentNodes);

double sumsq_true_mean(std::uint32_t d);
double sumsq_true_variance(std::uint32_t d);

// Moments of f regardless of kind: midpoint table for g1..g4, closed form for sumsq.
ReferenceMoments moments_for(const Integrand& f);

}  // namespace rhalton
