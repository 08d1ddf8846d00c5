#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wbt {

/// Largest upper end accepted by the segmented prime enumerators.
inline constexpr std::uint64_t kMaxPrimeRangeHi = 1'000'100'000'000ULL;

/// Default number of integers covered by one sieve segment.
inline constexpr std::uint64_t kDefaultPrimeSegment = 1ULL << 20;

/// All primes p <= n, by a plain sieve of Eratosthenes.
[[nodiscard]] std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Primes in [lo, hi] enumerated segment by segment.
///
/// Base primes up to sqrt(hi) are computed once; each segment is sieved into a
/// reusable byte buffer, so memory stays O(sqrt(hi) + segment).
class PrimeRange {
public:
    PrimeRange(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_length = kDefaultPrimeSegment);

    [[nodiscard]] std::uint64_t lo() const { return lo_; }
    [[nodiscard]] std::uint64_t hi() const { return hi_; }

    /// Calls fn(p) for each prime in [lo, hi], ascending.
    template <class Fn>
    void for_each(Fn&& fn) const
    {
        std::vector<std::uint64_t> buf;
        for (std::uint64_t base = lo_; base <= hi_;) {
            const std::uint64_t end = (hi_ - base < segment_ - 1) ? hi_ : base + segment_ - 1;
            sieve_segment(base, end, buf);
            for (std::uint64_t p : buf)
                fn(p);
            if (end == hi_)
                break;
            base = end + 1;
        }
    }

    [[nodiscard]] std::vector<std::uint64_t> collect() const;
    [[nodiscard]] std::uint64_t count() const;

private:
    void sieve_segment(std::uint64_t a, std::uint64_t b, std::vector<std::uint64_t>& out) const;

    std::uint64_t lo_;
    std::uint64_t hi_;
    std::uint64_t segment_;
    std::vector<std::uint32_t> base_;
};

} // namespace wbt
