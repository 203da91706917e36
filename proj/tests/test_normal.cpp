#include "rhalton/normal.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cerrno>
#include <cmath>
#include <limits>

using namespace rhalton;

namespace {

// Independent inversion of norm_cdf by bisection, for u <= 1/2.
double bisect_quantile(double u)
{
    double lo = -40.0, hi = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        (norm_cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double oracle_quantile(double u)
{
    return u <= 0.5 ? bisect_quantile(u) : -bisect_quantile(1.0 - u);
}

}  // namespace

TEST_CASE("norm_cdf values")
{
    CHECK(norm_cdf(0.0) == 0.5);
    CHECK(std::abs(norm_cdf(1.0) - 0.8413447460685429) <= 1e-15);
    CHECK(std::abs(norm_cdf(-1.0) - (1.0 - norm_cdf(1.0))) <= 1e-15);
    // long double erfc as a higher-precision reference
    for (double z = -8.0; z <= 8.0; z += 0.0625) {
        const long double ref = 0.5L * std::erfc(-static_cast<long double>(z) / std::sqrt(2.0L));
        REQUIRE(std::abs(norm_cdf(z) - static_cast<double>(ref)) <= 1e-12);
    }
}

TEST_CASE("norm_cdf propagates NaN with errno")
{
    errno = 0;
    CHECK(std::isnan(norm_cdf(std::numeric_limits<double>::quiet_NaN())));
    CHECK(errno == EDOM);
}

TEST_CASE("norm_quantile values")
{
    CHECK(norm_quantile(0.5) == 0.0);
    CHECK(norm_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));
    CHECK(norm_quantile(0.001) == doctest::Approx(-3.090232306167814).epsilon(1e-14));
    CHECK(norm_quantile(0.025) == doctest::Approx(-norm_quantile(0.975)).epsilon(1e-14));
}

TEST_CASE("norm_quantile domain")
{
    CHECK_THROWS_AS(norm_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(norm_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(norm_quantile(-0.1), std::domain_error);
    CHECK_THROWS_AS(norm_quantile(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("norm_quantile relative accuracy against bisection")
{
    for (double e = -300.0; e <= -0.31; e += 0.37) {
        const double u = std::pow(10.0, e);
        const double z = norm_quantile(u);
        const double ref = oracle_quantile(u);
        REQUIRE(std::abs(z - ref) <= 1e-9 * std::abs(ref));
    }
    for (double u = 0.01; u < 0.995; u += 0.0173) {
        const double ref = oracle_quantile(u);
        REQUIRE(std::abs(norm_quantile(u) - ref) <= 1e-9 * std::max(std::abs(ref), 1e-3));
    }
    for (double e = -16.0; e <= -2.0; e += 0.5) {
        const double u = 1.0 - std::pow(10.0, e);
        const double ref = oracle_quantile(u);
        REQUIRE(std::abs(norm_quantile(u) - ref) <= 1e-9 * std::abs(ref));
    }
}

TEST_CASE("round trip cdf(quantile(u))")
{
    for (double e = -10.0; e <= -0.31; e += 0.05) {
        const double u = std::pow(10.0, e);
        REQUIRE(std::abs(norm_cdf(norm_quantile(u)) - u) <= 1e-11);
        const double v = 1.0 - u;
        REQUIRE(std::abs(norm_cdf(norm_quantile(v)) - v) <= 1e-11);
    }
}

TEST_CASE("monotone on dense grids")
{
    double prev = norm_quantile(1e-12);
    for (int i = 1; i < 100000; ++i) {
        const double u = i / 100000.0;
        const double z = norm_quantile(u);
        REQUIRE(z > prev);
        prev = z;
    }
    double prev_p = norm_cdf(-10.0);
    for (double z = -10.0 + 1e-3; z < 8.0; z += 1e-3) {
        const double p = norm_cdf(z);
        REQUIRE(p >= prev_p);
        prev_p = p;
    }
}

TEST_CASE("norm_pdf")
{
    CHECK(norm_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-16));
    CHECK(norm_pdf(40.0) == doctest::Approx(0.0));
    for (double z = 0.0; z <= 37.0; z += 0.173) {
        CHECK(norm_pdf(z) == norm_pdf(-z));
        const long double ref = std::exp(-0.5L * z * z) / std::sqrt(2.0L * 3.14159265358979323846264338327950288L);
        const double r = static_cast<double>(ref);
        const double ulp = std::nextafter(r, 1.0) - r;
        REQUIRE(std::abs(norm_pdf(z) - r) <= 2.0 * ulp);
    }
}

TEST_CASE("cdf derivative matches the density")
{
    const double h = 1e-5;
    for (double z = -5.0; z <= 5.0; z += 0.25) {
        const double fd = (norm_cdf(z + h) - norm_cdf(z - h)) / (2 * h);
        CHECK(std::abs(fd - norm_pdf(z)) <= 1e-9);
    }
}
