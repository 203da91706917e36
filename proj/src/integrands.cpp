#include "rhalton/integrands.hpp"

#include "rhalton/normal.hpp"
#include "rhalton/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace rhalton {

namespace {

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v)
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

std::string_view to_string(IntegrandKind kind)
{
    switch (kind) {
    case IntegrandKind::g1: return "g1";
    case IntegrandKind::g2: return "g2";
    case IntegrandKind::g3: return "g3";
    case IntegrandKind::g4: return "g4";
    case IntegrandKind::sumsq: return "sumsq";
    }
    return "unknown";
}

IntegrandKind parse_integrand_kind(std::string_view name)
{
    if (name == "g1" || name == "f1") return IntegrandKind::g1;
    if (name == "g2" || name == "f2") return IntegrandKind::g2;
    if (name == "g3" || name == "f3") return IntegrandKind::g3;
    if (name == "g4" || name == "f4") return IntegrandKind::g4;
    if (name == "sumsq") return IntegrandKind::sumsq;
    throw std::invalid_argument("unknown integrand '" + std::string(name) + "' (expected g1|g2|g3|g4|sumsq)");
}

bool is_gaussian_kind(IntegrandKind kind)
{
    return kind != IntegrandKind::sumsq;
}

double rare_event_threshold()
{
    static const double threshold = norm_quantile(0.001);
    return threshold;
}

double link(IntegrandKind kind, double z)
{
    switch (kind) {
    case IntegrandKind::g1: return norm_cdf(z + 1.0);
    case IntegrandKind::g2: return z + 1.0 >= 0.0 ? 1.0 : 0.0;
    case IntegrandKind::g3: return std::max(z + 1.0, 0.0);
    case IntegrandKind::g4: return z < rare_event_threshold() ? 1.0 : 0.0;
    case IntegrandKind::sumsq: break;
    }
    throw std::invalid_argument("link: sumsq is not a function of a Gaussian sum");
}

Integrand::Integrand(IntegrandKind kind, std::uint32_t dimension) : kind_(kind), dim_(dimension)
{
    if (dimension == 0)
        throw std::invalid_argument("Integrand: dimension must be >= 1");
}

double Integrand::operator()(std::span<const double> x) const
{
    if (x.size() != dim_)
        throw std::invalid_argument("Integrand: point has " + std::to_string(x.size()) + " coordinates, expected " +
                                    std::to_string(dim_));
    if (kind_ == IntegrandKind::sumsq) {
        double s = 0.0;
        for (const double v : x)
            s += v;
        return s * s;
    }
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] > 0.0 && x[j] < 1.0))
            throw std::domain_error("Integrand " + std::string(to_string(kind_)) + ": coordinate " +
                                    std::to_string(j + 1) + " = " + std::to_string(x[j]) +
                                    " lies outside (0, 1)");
        s += norm_quantile(x[j]);
    }
    return link(kind_, s / std::sqrt(static_cast<double>(dim_)));
}

double evaluate(const Integrand& f, std::span<const double> x)
{
    return f(x);
}

double gaussian_midpoint_mean(const std::function<double(double)>& h, std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("gaussian_midpoint_mean: need at least one node");

    // Node l and node m-1-l map to z and -z, so only half the quantiles are computed.
    const std::uint64_t half = m / 2;
    constexpr std::uint64_t chunk = 1 << 16;
    const std::size_t chunks = static_cast<std::size_t>((half + chunk - 1) / chunk);
    std::vector<CompensatedSum> partial(chunks);
    const double md = static_cast<double>(m);
    parallel_for(chunks, [&](std::size_t c) {
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = std::min(half, begin + chunk);
        CompensatedSum acc;
        for (std::uint64_t l = begin; l < end; ++l) {
            const double z = norm_quantile((static_cast<double>(l) + 0.5) / md);
            acc.add(h(z));
            acc.add(h(-z));
        }
        partial[c] = acc;
    });
    CompensatedSum total;
    for (const auto& p : partial) {
        total.add(p.sum);
        total.add(p.comp);
    }
    if (m % 2 == 1)
        total.add(h(0.0));
    return total.value() / md;
}

namespace {

ReferenceMoments compute_moments(IntegrandKind kind, std::uint64_t m)
{
    ReferenceMoments out;
    out.resolution = m;
    out.mu = gaussian_midpoint_mean([kind](double z) { return link(kind, z); }, m);
    const double mu = out.mu;
    out.sigma2 = gaussian_midpoint_mean(
        [kind, mu](double z) {
            const double e = link(kind, z) - mu;
            return e * e;
        },
        m);
    return out;
}

}  // namespace

ReferenceMoments reference_moments(IntegrandKind kind, std::uint64_t m)
{
    if (!is_gaussian_kind(kind))
        throw std::invalid_argument("reference_moments: sumsq moments depend on d; use sumsq_true_mean/variance");
    if (m < 1000)
        throw std::invalid_argument("reference_moments: need at least 1000 midpoint nodes");
    if (m != kDefaultMomentNodes)
        return compute_moments(kind, m);

    static std::array<std::once_flag, 4> once;
    static std::array<ReferenceMoments, 4> cache;
    const auto slot = static_cast<std::size_t>(kind);
    std::call_once(once[slot], [&] { cache[slot] = compute_moments(kind, m); });
    return cache[slot];
}

double sumsq_true_mean(std::uint32_t d)
{
    const double dd = d;
    return dd * dd / 4.0 + dd / 12.0;
}

double sumsq_true_variance(std::uint32_t d)
{
    // S = d/2 + T with T a sum of d centered uniforms: E T^2 = d/12,
    // E T^3 = 0, E T^4 = d/80 + 3 d (d - 1) / 144.
    const double dd = d;
    const double h = dd / 2.0;
    const double t2 = dd / 12.0;
    const double t4 = dd / 80.0 + 3.0 * dd * (dd - 1.0) / 144.0;
    const double s4 = h * h * h * h + 6.0 * h * h * t2 + t4;
    const double s2 = sumsq_true_mean(d);
    return s4 - s2 * s2;
}

ReferenceMoments moments_for(const Integrand& f)
{
    if (f.kind() == IntegrandKind::sumsq)
        return {sumsq_true_mean(f.dimension()), sumsq_true_variance(f.dimension()), 0};
    return reference_moments(f.kind());
}

}  // namespace rhalton
