#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rhalton {

// Largest index accepted by the radical inverse routines (2^53 - 1).
inline constexpr std::uint64_t kMaxIndex = (std::uint64_t{1} << 53) - 1;

// Number of base-b digits summed at binary64 precision. Counts the weights
// b^-k (computed by repeated division, k = 1, 2, ...) for which 1.0 - b^-k < 1.0
// still holds. K(2) = 53, K(3) = 34, K(11) = 15.
std::uint32_t digit_depth(std::uint32_t base);

// Base-b digits of `index`, least significant first. Zero yields an empty vector.
std::vector<std::uint32_t> digits(std::uint64_t index, std::uint32_t base);

// Unscrambled radical inverse phi_b(i) for each index.
std::vector<double> radical_inverse(std::span<const std::uint64_t> indices, std::uint32_t base);
double radical_inverse(std::uint64_t index, std::uint32_t base);

// One independent uniform permutation of {0, ..., b-1} per digit position
// k = 1 .. digit_depth(b). Permutation k depends only on (column seed, b, k).
class PermutationStream {
public:
    PermutationStream(std::uint32_t base, std::uint64_t column_seed);

    // Builds a stream from explicit tables; each must be a permutation of
    // {0, ..., base-1} and there must be digit_depth(base) of them.
    static PermutationStream from_tables(std::uint32_t base,
                                         const std::vector<std::vector<std::uint32_t>>& tables);

    // Fisher-Yates shuffle of the identity driven by KeyedGenerator(seed, base, k).
    static std::vector<std::uint32_t> permutation_for(std::uint32_t base, std::uint64_t column_seed,
                                                      std::uint32_t k);

    std::uint32_t base() const { return base_; }
    std::uint32_t depth() const { return depth_; }
    std::uint64_t column_seed() const { return seed_; }

    // Image of `digit` under the permutation for 1-based digit position k.
    std::uint32_t apply(std::uint32_t k, std::uint32_t digit) const
    {
        return table_[static_cast<std::size_t>(k - 1) * base_ + digit];
    }

    std::span<const std::uint32_t> permutation(std::uint32_t k) const
    {
        return {table_.data() + static_cast<std::size_t>(k - 1) * base_, base_};
    }

private:
    PermutationStream() = default;

    std::uint32_t base_ = 0;
    std::uint32_t depth_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::uint32_t> table_;
};

inline PermutationStream make_permutation_stream(std::uint32_t base, std::uint64_t column_seed)
{
    return PermutationStream(base, column_seed);
}

// Sum over k = 1..K of pi_k(a_k(i)) b^-k, including the images of the
// implicit leading zero digits. Throws if `base` differs from the stream's.
std::vector<double> scrambled_radical_inverse(std::span<const std::uint64_t> indices, std::uint32_t base,
                                              const PermutationStream& stream);
double scrambled_radical_inverse(std::uint64_t index, const PermutationStream& stream);

}  // namespace rhalton
