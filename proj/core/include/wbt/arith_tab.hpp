#pragma once

#include "wbt/report.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace wbt {

/// Default number of integers tabulated per segment.
inline constexpr std::uint64_t kDefaultSegmentLength = 1ULL << 22;

/// Default cap on the number of entries a materialized ArithTable may hold (~1.1 GB).
inline constexpr std::uint64_t kDefaultTableBudget = 1ULL << 26;

/// mu, phi, sigma and omega for the integers [base, base + length).
struct Segment {
    std::uint64_t base = 0;
    std::uint64_t length = 0;
    std::vector<std::int8_t> mu;
    std::vector<std::uint64_t> phi;
    std::vector<std::uint64_t> sigma;
    std::vector<std::uint8_t> omega;

    [[nodiscard]] std::uint64_t end() const { return base + length; }
    [[nodiscard]] bool is_prime_at(std::uint64_t i) const { return omega[i] == 1 && phi[i] + 1 == base + i; }
};

/// Reusable segment tabulator. Base primes up to sqrt(hi) are computed once.
class SegmentTabulator {
public:
    explicit SegmentTabulator(std::uint64_t hi);

    /// Fills seg with the values on [base, base + length); requires base >= 1 and base + length - 1 <= hi.
    void fill(std::uint64_t base, std::uint64_t length, Segment& seg);

private:
    std::uint64_t hi_;
    std::vector<std::uint32_t> base_primes_;
    std::vector<std::uint64_t> rem_;
};

/// Streams consecutive segments covering [lo, hi] to fn, in ascending order.
void for_each_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_length,
                      const std::function<void(const Segment&)>& fn);

/// Materialized tabulation of mu, phi, sigma, omega on [lo, hi]. Immutable once built.
class ArithTable {
public:
    [[nodiscard]] std::uint64_t lo() const { return lo_; }
    [[nodiscard]] std::uint64_t hi() const { return hi_; }
    [[nodiscard]] bool covers(std::uint64_t a, std::uint64_t b) const { return a >= lo_ && b <= hi_; }

    [[nodiscard]] int mu(std::uint64_t n) const { return mu_[index(n)]; }
    [[nodiscard]] std::uint64_t phi(std::uint64_t n) const { return phi_[index(n)]; }
    [[nodiscard]] std::uint64_t sigma(std::uint64_t n) const { return sigma_[index(n)]; }
    [[nodiscard]] unsigned omega(std::uint64_t n) const { return omega_[index(n)]; }

    [[nodiscard]] std::span<const std::int8_t> mu_values() const { return mu_; }
    [[nodiscard]] std::span<const std::uint64_t> phi_values() const { return phi_; }
    [[nodiscard]] std::span<const std::uint64_t> sigma_values() const { return sigma_; }
    [[nodiscard]] std::span<const std::uint8_t> omega_values() const { return omega_; }

    bool operator==(const ArithTable&) const = default;

    /// Little-endian dump: "WBT1", lo, hi (u64), then per n: mu (i8), phi (u64), sigma (u64), omega (u8).
    void write_binary(std::ostream& os) const;
    [[nodiscard]] static ArithTable read_binary(std::istream& is);

private:
    friend ArithTable tabulate(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t);

    [[nodiscard]] std::size_t index(std::uint64_t n) const;

    std::uint64_t lo_ = 1;
    std::uint64_t hi_ = 0;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint64_t> phi_;
    std::vector<std::uint64_t> sigma_;
    std::vector<std::uint8_t> omega_;
};

/// Tabulates [lo, hi] segment by segment into one table.
/// Throws ResourceError when hi - lo + 1 exceeds max_entries; use for_each_segment to stream instead.
[[nodiscard]] ArithTable tabulate(std::uint64_t lo, std::uint64_t hi,
                                  std::uint64_t segment_length = kDefaultSegmentLength,
                                  std::uint64_t max_entries = kDefaultTableBudget);

/// Q(z): the number of squarefree n <= z, by a segmented square-marking sieve.
[[nodiscard]] std::uint64_t squarefree_count(std::uint64_t z);

/// Q at each point of zs (any order) in a single sieve pass up to max(zs).
[[nodiscard]] std::vector<std::uint64_t> squarefree_counts(std::span<const std::uint64_t> zs);

/// Checks |Q(z) - 6z/pi^2| <= 0.68 sqrt(z) on the real range [1, z_max].
///
/// Q is constant on [n, n+1), so both the value at n and the left limit at n+1
/// are examined. lhs is the largest ratio |Q(z) - 6z/pi^2| / sqrt(z) found,
/// rhs the constant 0.68; the witness z is recorded in params.
[[nodiscard]] BoundReport q_error_sweep(std::uint64_t z_max);

} // namespace wbt
