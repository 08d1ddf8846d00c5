#pragma once

#include <cstdint>
#include <numeric>

namespace wbt {

__extension__ using uint128 = unsigned __int128;

/// floor(sqrt(n)) exactly, for all 64-bit n.
[[nodiscard]] std::uint64_t isqrt(std::uint64_t n);

/// Euler's totient by trial-division factorization; intended for moduli k <= 1e12.
[[nodiscard]] std::uint64_t euler_phi(std::uint64_t k);

/// Residue of l modulo k in [0, k).
[[nodiscard]] constexpr std::uint64_t mod_floor(std::int64_t l, std::uint64_t k)
{
    const auto m = static_cast<std::int64_t>(k);
    const std::int64_t r = l % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

/// Smallest n >= from with n = residue (mod modulus).
[[nodiscard]] constexpr std::uint64_t first_in_class(std::uint64_t from, std::uint64_t residue,
                                                     std::uint64_t modulus)
{
    const std::uint64_t r = from % modulus;
    const std::uint64_t step = (residue + modulus - r) % modulus;
    return from + step;
}

/// Solves n = a (mod m1), n = 0 (mod m2) for coprime m1, m2; returns n mod m1*m2.
[[nodiscard]] std::uint64_t crt_with_zero(std::uint64_t a, std::uint64_t m1, std::uint64_t m2);

/// Inverse of a modulo m (requires gcd(a, m) = 1, m >= 1).
[[nodiscard]] std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

} // namespace wbt
