#include "wbt/number_theory.hpp"

#include "wbt/errors.hpp"

#include <cmath>

namespace wbt {

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<uint128>(r) * r > n)
        --r;
    while (static_cast<uint128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::uint64_t euler_phi(std::uint64_t k)
{
    detail::require<PreconditionError>(k >= 1, "euler_phi: k must be >= 1");
    std::uint64_t result = k;
    std::uint64_t n = k;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m)
{
    if (m == 1)
        return 0;
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    detail::require<PreconditionError>(old_r == 1, "mod_inverse: arguments not coprime");
    return mod_floor(old_s, m);
}

std::uint64_t crt_with_zero(std::uint64_t a, std::uint64_t m1, std::uint64_t m2)
{
    // n = m2 * t with m2 * t = a (mod m1)
    const std::uint64_t t = static_cast<std::uint64_t>(
        static_cast<uint128>(a % m1) * mod_inverse(m2 % m1, m1) % m1);
    return m2 * t;
}

} // namespace wbt
