#include "rhalton/radical_inverse.hpp"

#include "rhalton/keyed_rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rhalton {

namespace {

// Largest binary64 value below 1.
constexpr double kBelowOne = 0x1.fffffffffffffp-1;

void check_base(std::uint32_t base)
{
    if (base < 2)
        throw std::invalid_argument("radical inverse: base must be >= 2, got " + std::to_string(base));
}

void check_index(std::uint64_t index)
{
    if (index > kMaxIndex)
        throw std::out_of_range("radical inverse: index " + std::to_string(index) + " exceeds 2^53 - 1");
}

// Rounding in the running sum can reach 1.0 when every digit is b-1.
double clamp_below_one(double x)
{
    return x < 1.0 ? x : kBelowOne;
}

}  // namespace

std::uint32_t digit_depth(std::uint32_t base)
{
    check_base(base);
    // volatile keeps the comparison in binary64 on targets with wider registers
    volatile double b2r = 1.0 / base;
    std::uint32_t k = 0;
    while (1.0 - b2r < 1.0) {
        ++k;
        b2r = b2r / base;
    }
    return k;
}

std::vector<std::uint32_t> digits(std::uint64_t index, std::uint32_t base)
{
    check_base(base);
    std::vector<std::uint32_t> out;
    while (index > 0) {
        out.push_back(static_cast<std::uint32_t>(index % base));
        index /= base;
    }
    return out;
}

double radical_inverse(std::uint64_t index, std::uint32_t base)
{
    check_base(base);
    check_index(index);
    const std::uint32_t depth = digit_depth(base);
    double ans = 0.0;
    double b2r = 1.0 / base;
    std::uint64_t res = index;
    for (std::uint32_t k = 1; k <= depth && res > 0; ++k) {
        const auto dig = res % base;
        ans += static_cast<double>(dig) * b2r;
        b2r /= base;
        res /= base;
    }
    return clamp_below_one(ans);
}

std::vector<double> radical_inverse(std::span<const std::uint64_t> indices, std::uint32_t base)
{
    std::vector<double> out;
    out.reserve(indices.size());
    for (const auto i : indices)
        out.push_back(radical_inverse(i, base));
    return out;
}

std::vector<std::uint32_t> PermutationStream::permutation_for(std::uint32_t base, std::uint64_t column_seed,
                                                              std::uint32_t k)
{
    check_base(base);
    std::vector<std::uint32_t> perm(base);
    std::iota(perm.begin(), perm.end(), 0u);
    KeyedGenerator gen(column_seed, base, k);
    for (std::uint32_t i = base - 1; i > 0; --i) {
        const auto j = static_cast<std::uint32_t>(gen.below(std::uint64_t{i} + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

PermutationStream::PermutationStream(std::uint32_t base, std::uint64_t column_seed)
    : base_(base), depth_(digit_depth(base)), seed_(column_seed)
{
    table_.reserve(static_cast<std::size_t>(depth_) * base_);
    for (std::uint32_t k = 1; k <= depth_; ++k) {
        const auto perm = permutation_for(base_, seed_, k);
        table_.insert(table_.end(), perm.begin(), perm.end());
    }
}

PermutationStream PermutationStream::from_tables(std::uint32_t base,
                                                 const std::vector<std::vector<std::uint32_t>>& tables)
{
    PermutationStream s;
    s.base_ = base;
    s.depth_ = digit_depth(base);
    if (tables.size() != s.depth_)
        throw std::invalid_argument("PermutationStream: expected " + std::to_string(s.depth_) +
                                    " permutations, got " + std::to_string(tables.size()));
    for (const auto& t : tables) {
        std::vector<bool> seen(base, false);
        if (t.size() != base)
            throw std::invalid_argument("PermutationStream: permutation has wrong length");
        for (const auto v : t) {
            if (v >= base || seen[v])
                throw std::invalid_argument("PermutationStream: table is not a permutation");
            seen[v] = true;
        }
        s.table_.insert(s.table_.end(), t.begin(), t.end());
    }
    return s;
}

double scrambled_radical_inverse(std::uint64_t index, const PermutationStream& stream)
{
    check_index(index);
    const std::uint32_t base = stream.base();
    const std::uint32_t depth = stream.depth();
    double ans = 0.0;
    double b2r = 1.0 / base;
    std::uint64_t res = index;
    for (std::uint32_t k = 1; k <= depth; ++k) {
        const auto dig = static_cast<std::uint32_t>(res % base);
        ans += static_cast<double>(stream.apply(k, dig)) * b2r;
        b2r /= base;
        res /= base;
    }
    return clamp_below_one(ans);
}

std::vector<double> scrambled_radical_inverse(std::span<const std::uint64_t> indices, std::uint32_t base,
                                              const PermutationStream& stream)
{
    if (base != stream.base())
        throw std::invalid_argument("scrambled_radical_inverse: stream built for base " +
                                    std::to_string(stream.base()) + ", called with base " +
                                    std::to_string(base));
    std::vector<double> out;
    out.reserve(indices.size());
    for (const auto i : indices)
        out.push_back(scrambled_radical_inverse(i, stream));
    return out;
}

}  // namespace rhalton
