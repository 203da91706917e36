#include "rhalton/halton.hpp"

#include "rhalton/parallel.hpp"
#include "rhalton/radical_inverse.hpp"

#include <stdexcept>
#include <string>

namespace rhalton {

std::uint64_t column_seed(const SeedSpec& seeds, std::uint64_t absolute_column)
{
    if (absolute_column == 0)
        throw std::out_of_range("column_seed: columns are 1-based");
    if (seeds.mode() == SeedSpec::Mode::single)
        return seeds.single_seed() + (absolute_column - 1);
    const auto& v = seeds.seed_vector();
    if (absolute_column > v.size())
        throw std::out_of_range("column_seed: seed vector has " + std::to_string(v.size()) +
                                " entries, column " + std::to_string(absolute_column) + " requested");
    return v[absolute_column - 1];
}

namespace {

void validate(const BlockRequest& req, const PrimeTable& primes)
{
    const std::uint64_t last_column = std::uint64_t{req.d0} + req.d;
    if (req.seeds.mode() == SeedSpec::Mode::vector && req.seeds.seed_vector().size() != last_column)
        throw std::invalid_argument("rhalton: seed vector must have d0 + d = " + std::to_string(last_column) +
                                    " entries, got " + std::to_string(req.seeds.seed_vector().size()));
    if (last_column > primes.cap())
        throw std::out_of_range("rhalton: d0 + d = " + std::to_string(last_column) + " exceeds the prime cap of " +
                                std::to_string(primes.cap()) +
                                "; construct a PrimeTable with a larger cap (CLI: --prime-cap)");
    if (req.n > 0) {
        const std::uint64_t last = req.index_offset + req.n0 + (req.n - 1);
        if (last < req.n0 || last > kMaxIndex)
            throw std::out_of_range("rhalton: row indices exceed 2^53 - 1");
    }
}

}  // namespace

PointMatrix rhalton(const BlockRequest& req, const PrimeTable& primes)
{
    validate(req, primes);
    PointMatrix out(req.n, req.d);
    if (req.n == 0 || req.d == 0)
        return out;

    parallel_for(req.d, [&](std::size_t j) {
        const std::uint64_t absolute = std::uint64_t{req.d0} + j + 1;
        const auto base = primes.nth_prime(static_cast<std::uint32_t>(absolute));
        const PermutationStream stream(base, column_seed(req.seeds, absolute));
        for (std::uint64_t i = 0; i < req.n; ++i)
            out(i, j) = scrambled_radical_inverse(req.index_offset + req.n0 + i, stream);
    });
    return out;
}

PointMatrix rhalton(std::uint64_t n, std::uint32_t d, std::uint64_t n0, std::uint32_t d0, std::uint64_t seed)
{
    BlockRequest req;
    req.n = n;
    req.d = d;
    req.n0 = n0;
    req.d0 = d0;
    req.seeds = SeedSpec::single(seed);
    return rhalton(req);
}

}  // namespace rhalton
