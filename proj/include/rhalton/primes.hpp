#pragma once

#include <cstdint>
#include <vector>

namespace rhalton {

// Number of Halton columns supported out of the box.
inline constexpr std::uint32_t kDefaultPrimeCap = 1000;

// Upper bound on the d'th prime usable as a sieve limit. Uses Rosser's bound
// d log d + d log log d for d >= 6 and the constant 13 below that.
std::uint64_t sieve_upper_bound(std::uint64_t d);

// The first `cap` primes, generated once by a sieve of Eratosthenes.
// Immutable after construction, so concurrent readers are fine.
class PrimeTable {
public:
    explicit PrimeTable(std::uint32_t cap = kDefaultPrimeCap);

    // 1-based: nth_prime(1) == 2. Throws std::out_of_range past cap().
    std::uint32_t nth_prime(std::uint32_t j) const;

    std::uint32_t cap() const { return cap_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    // Shared table with the default cap.
    static const PrimeTable& default_table();

private:
    std::uint32_t cap_;
    std::vector<std::uint32_t> primes_;
};

// Convenience wrapper over PrimeTable::default_table().
std::uint32_t nth_prime(std::uint32_t j);

}  // namespace rhalton
