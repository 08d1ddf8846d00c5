#pragma once

#include "wbt/arith_tab.hpp"
#include "wbt/report.hpp"
#include "wbt/weights.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wbt {

/// Modulus k, residue l and sieve level z, with gcd(l, k) = 1 and k, z >= 1.
class SieveParams {
public:
    SieveParams(std::uint64_t k, std::int64_t l, std::uint64_t z);

    [[nodiscard]] std::uint64_t k() const { return k_; }
    [[nodiscard]] std::int64_t l() const { return l_; }
    /// l reduced into [0, k).
    [[nodiscard]] std::uint64_t residue() const { return residue_; }
    [[nodiscard]] std::uint64_t z() const { return z_; }

private:
    std::uint64_t k_;
    std::int64_t l_;
    std::uint64_t residue_;
    std::uint64_t z_;
};

/// Largest z for which selberg_lambda materializes weights.
inline constexpr std::uint64_t kMaxLambdaLevel = 100'000;

/// Largest z accepted by the Eratosthenes bound (2^pi(z) must stay finite).
inline constexpr std::uint64_t kMaxEratosthenesLevel = 700;

/// Default cap on the number of progression members enumerated for a left-hand side.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// Selberg weights lambda_n on the squarefree n <= z coprime to k, ascending in n.
struct LambdaWeights {
    std::vector<std::pair<std::uint64_t, double>> entries;

    [[nodiscard]] double at(std::uint64_t n) const; ///< 0 off the support
    [[nodiscard]] std::size_t size() const { return entries.size(); }
};

/// S_k(z) = sum over n <= z, (n, k) = 1 of mu(n)^2 / phi(n). Ascending, compensated.
[[nodiscard]] double sieve_sum_S(const SieveParams& p, const ArithTable& tab);

/// H_k(z) = sum over n <= z, (n, k) = 1 of mu(n)^2 sigma(n) / phi(n).
[[nodiscard]] double sieve_sum_H(const SieveParams& p, const ArithTable& tab);

/// The minimizing Selberg weights
///   lambda_n = mu(n) * n / phi(n) * S_{k,n}(z / n) / S_k(z),
/// with S_{k,n}(w) = sum over m <= w, (m, nk) = 1 of mu(m)^2 / phi(m).
/// lambda_1 = 1 by construction. z is capped at kMaxLambdaLevel.
[[nodiscard]] LambdaWeights selberg_lambda(const SieveParams& p, const ArithTable& tab);

/// sum over (n1, n2) of lambda_n1 lambda_n2 / lcm(n1, n2), by brute force over all pairs.
[[nodiscard]] double selberg_quadratic_form(const LambdaWeights& w);

/// sum |lambda_n|.
[[nodiscard]] double lambda_abs_sum(const LambdaWeights& w);

/// r_d = sum of f(n) over n in I, n = l (mod k), d | n, minus ||f||_1 / (kd).
/// Requires gcd(d, k) = 1.
[[nodiscard]] double remainder_r(const WeightFunction& f, std::uint64_t k, std::int64_t l, std::uint64_t d);

/// sum of f(n) over n in I, n = l (mod k), n coprime to P(z, k).
[[nodiscard]] double sifted_sum(const WeightFunction& f, const SieveParams& p,
                                std::uint64_t budget = kEnumerationBudget);

enum class LhsMode { enumerate, bound_only };

/// S_1, H_1 and pi at a point z.
struct SieveSums {
    std::uint64_t z = 0;
    double S1 = 0.0;
    double H1 = 0.0;
    std::uint64_t pi = 0;
};

/// S_1(z), H_1(z), pi(z) at every z in zs (any order), streaming one segmented tabulation up to max(zs).
[[nodiscard]] std::vector<SieveSums> sieve_sums_at(std::span<const std::uint64_t> zs,
                                                   std::uint64_t segment_length = kDefaultSegmentLength);

/// Weighted Selberg upper bound
///   ||f||_1 / (k S_k(z)) + (||f||_inf + ||f'||_1) H_k(z)^2 / S_k(z)^2
/// compared (<=) with the enumerated sifted sum.
[[nodiscard]] BoundReport weighted_selberg_bound(const WeightFunction& f, const SieveParams& p,
                                                 const ArithTable& tab, LhsMode mode = LhsMode::enumerate);

/// Weighted Eratosthenes upper bound
///   ||f||_1 / k * prod_{p <= z, p !| k} (1 - 1/p) + (||f||_inf + ||f'||_1) 2^pi(z).
/// Requires z <= kMaxEratosthenesLevel.
[[nodiscard]] BoundReport weighted_eratosthenes_bound(const WeightFunction& f, const SieveParams& p,
                                                      const ArithTable& tab, LhsMode mode = LhsMode::enumerate);

} // namespace wbt
