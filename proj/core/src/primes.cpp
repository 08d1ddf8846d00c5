#include "wbt/primes.hpp"

#include "wbt/errors.hpp"
#include "wbt/number_theory.hpp"

#include <algorithm>
#include <string>

namespace wbt {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n)
{
    std::vector<std::uint32_t> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= n; j += i)
                composite[j] = true;
    for (std::uint32_t i = 2; i <= n; ++i)
        if (!composite[i])
            out.push_back(i);
    return out;
}

PrimeRange::PrimeRange(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_length)
    : lo_(lo), hi_(hi), segment_(segment_length)
{
    detail::require<PreconditionError>(segment_length >= 1, "PrimeRange: segment_length must be >= 1");
    detail::require<ResourceError>(hi <= kMaxPrimeRangeHi,
                                   "PrimeRange: upper end " + std::to_string(hi) + " exceeds supported maximum");
    if (lo_ < 2)
        lo_ = 2;
    base_ = primes_up_to(static_cast<std::uint32_t>(isqrt(hi_)));
}

void PrimeRange::sieve_segment(std::uint64_t a, std::uint64_t b, std::vector<std::uint64_t>& out) const
{
    out.clear();
    if (a > b)
        return;
    std::vector<unsigned char> mark(b - a + 1, 1);
    for (std::uint32_t p : base_) {
        const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
        if (pp > b)
            break;
        std::uint64_t start = std::max(pp, (a + p - 1) / p * p);
        for (std::uint64_t j = start; j <= b; j += p)
            mark[j - a] = 0;
    }
    for (std::uint64_t i = 0; i < mark.size(); ++i)
        if (mark[i])
            out.push_back(a + i);
}

std::vector<std::uint64_t> PrimeRange::collect() const
{
    std::vector<std::uint64_t> out;
    for_each([&](std::uint64_t p) { out.push_back(p); });
    return out;
}

std::uint64_t PrimeRange::count() const
{
    std::uint64_t c = 0;
    for_each([&](std::uint64_t) { ++c; });
    return c;
}

} // namespace wbt
