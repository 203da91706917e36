#include "rhalton/primes.hpp"
#include "rhalton/radical_inverse.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

using namespace rhalton;

namespace {

std::vector<std::uint64_t> iota_indices(std::uint64_t start, std::uint64_t count)
{
    std::vector<std::uint64_t> v(count);
    std::iota(v.begin(), v.end(), start);
    return v;
}

PermutationStream constant_stream(std::uint32_t base, bool reversed)
{
    std::vector<std::uint32_t> p(base);
    std::iota(p.begin(), p.end(), 0u);
    if (reversed)
        std::reverse(p.begin(), p.end());
    return PermutationStream::from_tables(base, std::vector(digit_depth(base), p));
}

}  // namespace

TEST_CASE("van der Corput table")
{
    const auto idx = iota_indices(0, 8);
    const auto x = radical_inverse(idx, 2);
    const std::vector<double> expected{0.0, 0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875};
    CHECK(x == expected);
    CHECK(radical_inverse(5, 2) == 0.625);
}

TEST_CASE("radical inverse rejects bad input")
{
    CHECK_THROWS_AS(radical_inverse(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(radical_inverse(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(radical_inverse(kMaxIndex + 1, 2), std::out_of_range);
    CHECK_NOTHROW(radical_inverse(kMaxIndex, 2));
}

TEST_CASE("radical inverse is exact in base 2 up to 2^53 - 1")
{
    // phi_2(i) reverses the bits of i: an exact dyadic value
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; ++t) {
        const std::uint64_t i = rng() & kMaxIndex;
        std::uint64_t r = 0;
        for (int b = 0; b < 53; ++b)
            r |= ((i >> b) & 1u) << (52 - b);
        CHECK(radical_inverse(i, 2) == std::ldexp(static_cast<double>(r), -53));
    }
}

TEST_CASE("digit depth follows the binary64 stopping rule")
{
    CHECK(digit_depth(2) == 53);
    CHECK(digit_depth(3) == 34);
    CHECK(digit_depth(11) == 15);
    for (const auto b : PrimeTable::default_table().primes()) {
        const auto k = digit_depth(b);
        volatile double w = 1.0;
        for (std::uint32_t i = 0; i < k; ++i)
            w = w / b;
        REQUIRE(1.0 - w < 1.0);
        w = w / b;
        REQUIRE(!(1.0 - w < 1.0));
    }
}

TEST_CASE("digits reconstruct the index")
{
    std::mt19937_64 rng(11);
    for (const std::uint32_t b : {2u, 3u, 7u, 43u, 7919u}) {
        for (int t = 0; t < 200; ++t) {
            const std::uint64_t i = rng() & kMaxIndex;
            const auto a = digits(i, b);
            std::uint64_t back = 0;
            for (std::size_t k = a.size(); k-- > 0;) {
                REQUIRE(a[k] < b);
                back = back * b + a[k];
            }
            CHECK(back == i);
        }
    }
    CHECK(digits(0, 5).empty());
}

TEST_CASE("permutation streams are deterministic permutations")
{
    for (const std::uint32_t b : {2u, 3u, 5u, 47u, 1031u}) {
        const auto s1 = make_permutation_stream(b, 12345);
        const auto s2 = make_permutation_stream(b, 12345);
        REQUIRE(s1.depth() == digit_depth(b));
        for (std::uint32_t k = 1; k <= s1.depth(); ++k) {
            std::vector<std::uint32_t> p(s1.permutation(k).begin(), s1.permutation(k).end());
            CHECK(std::ranges::equal(s1.permutation(k), s2.permutation(k)));
            // derivable without the earlier digits
            CHECK(p == PermutationStream::permutation_for(b, 12345, k));
            std::sort(p.begin(), p.end());
            std::vector<std::uint32_t> id(b);
            std::iota(id.begin(), id.end(), 0u);
            CHECK(p == id);
        }
    }
}

TEST_CASE("base 2 permutations are fair coin flips")
{
    int flipped = 0;
    constexpr int seeds = 10000;
    for (int s = 0; s < seeds; ++s) {
        const auto p = PermutationStream::permutation_for(2, s, 1);
        CHECK(((p[0] == 0 && p[1] == 1) || (p[0] == 1 && p[1] == 0)));
        flipped += p[0] == 1 ? 1 : 0;
    }
    // binomial sd = 0.005; band is 4 sd
    CHECK(std::abs(flipped / double(seeds) - 0.5) <= 0.02);
}

TEST_CASE("identity scramble equals the plain radical inverse bit for bit")
{
    std::mt19937_64 rng(3);
    for (const auto b : {2u, 3u, 5u, 11u, 43u, 47u, 1031u, 7919u}) {
        const auto id = constant_stream(b, false);
        std::vector<std::uint64_t> idx = iota_indices(0, 300);
        for (int t = 0; t < 300; ++t)
            idx.push_back(rng() & kMaxIndex);
        const auto plain = radical_inverse(idx, b);
        const auto scr = scrambled_radical_inverse(idx, b, id);
        for (std::size_t i = 0; i < idx.size(); ++i)
            REQUIRE(std::bit_cast<std::uint64_t>(plain[i]) == std::bit_cast<std::uint64_t>(scr[i]));
    }
}

TEST_CASE("reversal scramble of zero is the geometric sum")
{
    const auto rev = constant_stream(2, true);
    const std::uint32_t k = digit_depth(2);
    double oracle = 0.0;
    for (std::uint32_t i = 1; i <= k; ++i)
        oracle += std::ldexp(1.0, -static_cast<int>(i));
    CHECK(scrambled_radical_inverse(0, rev) == oracle);
    CHECK(oracle == 1.0 - std::ldexp(1.0, -53));
}

TEST_CASE("outputs stay below one even with every digit maximal")
{
    for (const auto b : PrimeTable::default_table().primes()) {
        const auto rev = constant_stream(b, true);
        const double x = scrambled_radical_inverse(0, rev);
        REQUIRE(x < 1.0);
        REQUIRE(x > 0.9);
    }
    for (const auto b : {2u, 3u, 101u, 7919u}) {
        const auto s = make_permutation_stream(b, 99);
        for (std::uint64_t i = 0; i < 2000; ++i) {
            const double x = scrambled_radical_inverse(i, s);
            REQUIRE(x >= 0.0);
            REQUIRE(x < 1.0);
        }
    }
}

TEST_CASE("stream base mismatch is an error")
{
    const auto s = make_permutation_stream(3, 1);
    const std::vector<std::uint64_t> idx{1, 2};
    CHECK_THROWS_AS(scrambled_radical_inverse(idx, 5, s), std::invalid_argument);
}

TEST_CASE("first digit stratifies any b consecutive indices")
{
    for (const std::uint32_t b : {2u, 3u, 5u}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto s = make_permutation_stream(b, seed);
            const auto x = scrambled_radical_inverse(iota_indices(0, b), b, s);
            std::vector<int> hits(b, 0);
            for (const double v : x)
                ++hits[static_cast<std::size_t>(v * b)];
            CHECK(std::ranges::all_of(hits, [](int h) { return h == 1; }));
        }
    }
}

TEST_CASE("b^r consecutive indices land one per cell")
{
    std::mt19937_64 rng(17);
    for (const std::uint32_t b : {2u, 3u, 5u}) {
        for (int r = 1; r <= 3; ++r) {
            const auto cells = static_cast<std::uint64_t>(std::pow(b, r));
            for (int t = 0; t < 20; ++t) {
                const auto s = make_permutation_stream(b, rng());
                const std::uint64_t start = rng() % 1'000'000'000;
                const auto x = scrambled_radical_inverse(iota_indices(start, cells), b, s);
                std::vector<int> hits(cells, 0);
                for (const double v : x)
                    ++hits[static_cast<std::size_t>(v * static_cast<double>(cells))];
                CHECK(std::ranges::all_of(hits, [](int h) { return h == 1; }));
            }
        }
    }
}

TEST_CASE("each scrambled index is uniform over seeds")
{
    for (const std::uint64_t i : {0ull, 1ull, 12345ull}) {
        for (const std::uint32_t b : {2u, 3u, 47u}) {
            std::vector<double> xs;
            for (std::uint64_t seed = 0; seed < 10000; ++seed)
                xs.push_back(scrambled_radical_inverse(i, make_permutation_stream(b, seed)));
            CHECK(test_support::ks_uniform(xs) < test_support::ks_critical_1pct(xs.size()));
        }
    }
}
