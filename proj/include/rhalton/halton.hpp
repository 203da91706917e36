#pragma once

#include "rhalton/primes.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rhalton {

// Where column seeds come from. In single mode absolute column j (1-based)
// gets seed s + j - 1 with wrapping 64-bit addition. In vector mode the user
// lists one seed per absolute column 1 .. d0 + d; supplying only d seeds when
// d0 > 0 is rejected so a seed is never silently reused across columns.
class SeedSpec {
public:
    enum class Mode { single, vector };

    static SeedSpec single(std::uint64_t seed) { return SeedSpec(Mode::single, seed, {}); }
    static SeedSpec vector(std::vector<std::uint64_t> seeds) { return SeedSpec(Mode::vector, 0, std::move(seeds)); }

    Mode mode() const { return mode_; }
    std::uint64_t single_seed() const { return single_; }
    const std::vector<std::uint64_t>& seed_vector() const { return vector_; }

private:
    SeedSpec(Mode mode, std::uint64_t single, std::vector<std::uint64_t> vec)
        : mode_(mode), single_(single), vector_(std::move(vec))
    {
    }

    Mode mode_;
    std::uint64_t single_;
    std::vector<std::uint64_t> vector_;
};

// Seed for 1-based absolute column. Throws std::out_of_range in vector mode
// when the column has no seed.
std::uint64_t column_seed(const SeedSpec& seeds, std::uint64_t absolute_column);

struct BlockRequest {
    std::uint64_t n = 0;
    std::uint32_t d = 0;
    std::uint64_t n0 = 0;
    std::uint32_t d0 = 0;
    SeedSpec seeds = SeedSpec::single(0);
    // Added to every row index before the radical inverse. Zero reproduces the
    // usual x_i = phi(i - 1) indexing.
    std::uint64_t index_offset = 0;
};

// Row-major n x d block; row i is one point.
class PointMatrix {
public:
    PointMatrix() = default;
    PointMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const { return {values_.data() + i * cols_, cols_}; }
    std::span<const double> values() const { return values_; }

    bool operator==(const PointMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

// Block X_ij = scrambled Halton entry (n0 + i, d0 + j) for the given seeds.
// Column j uses base p_{d0+j}; only columns d0+1 .. d0+d are materialized.
PointMatrix rhalton(const BlockRequest& request, const PrimeTable& primes = PrimeTable::default_table());

// Positional shorthand for single-seed blocks.
PointMatrix rhalton(std::uint64_t n, std::uint32_t d, std::uint64_t n0, std::uint32_t d0, std::uint64_t seed);

}  // namespace rhalton
