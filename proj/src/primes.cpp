#include "rhalton/primes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rhalton {

std::uint64_t sieve_upper_bound(std::uint64_t d)
{
    if (d < 6)
        return 13;
    const double dd = static_cast<double>(d);
    const double bound = dd * std::log(dd) + dd * std::log(std::log(dd));
    return static_cast<std::uint64_t>(std::ceil(bound));
}

PrimeTable::PrimeTable(std::uint32_t cap) : cap_(cap)
{
    if (cap == 0)
        throw std::invalid_argument("PrimeTable: cap must be at least 1");

    const std::uint64_t limit = sieve_upper_bound(cap);
    std::vector<bool> composite(limit + 1, false);
    primes_.reserve(cap);
    for (std::uint64_t p = 2; p <= limit && primes_.size() < cap; ++p) {
        if (composite[p])
            continue;
        primes_.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= limit; m += p)
            composite[m] = true;
    }
    if (primes_.size() < cap)
        throw std::logic_error("PrimeTable: sieve bound too small for cap " + std::to_string(cap));
}

std::uint32_t PrimeTable::nth_prime(std::uint32_t j) const
{
    if (j == 0)
        throw std::out_of_range("nth_prime: index is 1-based, got 0");
    if (j > cap_)
        throw std::out_of_range("nth_prime: index " + std::to_string(j) + " exceeds the prime cap of " +
                                std::to_string(cap_) +
                                "; construct a PrimeTable with a larger cap (CLI: --prime-cap)");
    return primes_[j - 1];
}

const PrimeTable& PrimeTable::default_table()
{
    static const PrimeTable table(kDefaultPrimeCap);
    return table;
}

std::uint32_t nth_prime(std::uint32_t j)
{
    return PrimeTable::default_table().nth_prime(j);
}

}  // namespace rhalton
