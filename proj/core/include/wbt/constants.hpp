#pragma once

#include "wbt/arith_tab.hpp"
#include "wbt/report.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wbt {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// zeta(s) for real s > 1: direct sum of `terms` terms plus an Euler-Maclaurin tail.
[[nodiscard]] double zeta(double s, std::uint64_t terms = 1'000'000);

/// zeta'(s) for real s > 1, same scheme applied to -log(n) n^{-s}.
[[nodiscard]] double zeta_derivative(double s, std::uint64_t terms = 1'000'000);

/// Primes known to be complete up to `limit`.
struct PrimeTable {
    std::vector<std::uint32_t> primes;
    std::uint64_t limit = 0;

    [[nodiscard]] static PrimeTable up_to(std::uint32_t limit);
};

/// Which Euler product from the H_1 (numerator 2) or S_1 (numerator 1) analysis.
enum class EulerVariant { H_lemma, S_lemma };

enum class TailStrategy { none, zeta_ratio_bound };

/// Local factors 1 + c / ((1 + p^s)(p - 1)), or with (p^s - 1) when tilde is set;
/// c = 2 for H_lemma and c = 1 for S_lemma. The direct product runs over p < cutoff.
struct EulerProductSpec {
    EulerVariant variant = EulerVariant::H_lemma;
    bool tilde = false;
    double s = 1.0;
    std::uint64_t cutoff = 10'000;
    TailStrategy tail = TailStrategy::none;
};

struct EulerProductResult {
    double partial = 0.0;   ///< prod over p < cutoff of the local factors
    double bound = 0.0;     ///< certified upper bound for the full product (== partial if no tail)
    double reduced = 0.0;   ///< prod over p < cutoff of factor / (1 + p^{-1-s})^e
    double zeta_ratio = 0.0; ///< (zeta(1 + s) / zeta(2 + 2s))^e
    int tail_exponent = 0;  ///< e
};

/// Direct product, optionally with a certified tail.
///
/// The zeta-ratio tail uses factor_p <= 1 + e p^{-1-s} <= (1 + p^{-1-s})^e for
/// p >= cutoff, whose full product is (zeta(1+s) / zeta(2+2s))^e. The local
/// inequality comes from (sqrt(t)-1)(t-1) >= 2/3 t^{3/2} for t >= 16 (H_lemma,
/// s = 1/2, e = 3) or (t^s - 1)(t - 1) >= t^{1+s}/2 for s >= 1/4, t >= 20
/// (e = 2 for S_lemma, e = 4 for H_lemma otherwise).
[[nodiscard]] EulerProductResult euler_product(const EulerProductSpec& spec, const PrimeTable& primes);

/// zeta(2), zeta(4) against their closed forms, zeta(3/2), zeta(3), and zeta(3/2)^3 / zeta(3)^3 <= 10.27.
[[nodiscard]] std::vector<ConstantsReport> zeta_constants();

/// h(1) and the certified tilde-h bounds used for H_1 (h~(1/2) <= 36 via a reduced product <= 3.5).
[[nodiscard]] std::vector<ConstantsReport> h_lemma_constants();

/// h(1) = zeta(2), h~(3/8) <= 19 and h~(1/2) <= 9.4 for S_1.
[[nodiscard]] std::vector<ConstantsReport> s_lemma_constants();

/// The constant A = gamma / zeta(2) - 2 zeta'(2) / zeta(2)^2.
struct ConstantA {
    double recipe_bound = 0.0;   ///< gamma/zeta(2) + 2|sum_{d<=100} mu(d) log d / d^2| + 2 (log 100 + 1)/100
    double truncated = 0.0;      ///< gamma/zeta(2) - 2 sum_{d<=truncation} mu(d) log d / d^2
    double truncation_error = 0.0; ///< 2 (log N + 1) / N
    double closed_form = 0.0;    ///< from zeta(2) and zeta'(2)
    std::uint64_t truncation = 0;
    std::vector<ConstantsReport> reports;
};

[[nodiscard]] ConstantA constant_A(std::uint64_t truncation = 1'000'000);

/// (sqrt(t)-1)(t-1) >= 2/3 t^{3/2}, (t^s-1)(t-1) >= t^{1+s}/2, log z <= 1.56 z^{1/8} on log grids.
[[nodiscard]] std::vector<ConstantsReport> elementary_inequalities();

/// |H_1(z) - 15 z / pi^2| <= 47 sqrt(z) at each sample (integers only). lhs = max normalized error.
[[nodiscard]] BoundReport verify_H_asymptotic(std::span<const std::uint64_t> z_samples, const ArithTable& tab);

/// Dense form: every real z in [1, z_max] (value at n and left limit at n+1), streamed.
[[nodiscard]] BoundReport verify_H_dense(std::uint64_t z_max);

/// Mertens-type constant B = gamma + sum_p log p / (p (p - 1)).
struct ConstantB {
    double lower = 0.0; ///< gamma + sum over p < cutoff
    double upper = 0.0; ///< lower + tail bound
    std::uint64_t cutoff = 0;
};

/// Tail bound: sum_{n >= P} 1.1 log n / n^2 <= 1.1 (log P + 1) / (P - 1) for P >= 12.
[[nodiscard]] ConstantB constant_B(std::uint64_t prime_cutoff);

struct SResidual {
    std::uint64_t z = 0;
    double S1 = 0.0;
    double residual = 0.0; ///< S_1(z) - log z - B (midpoint of B's enclosure)
    double scale = 0.0;    ///< 58 / sqrt(z)
};

struct SAsymptoticReport {
    ConstantB B;
    ConstantsReport small_prime_floor; ///< gamma + sum_{p<1000} - 0.002 >= 1.32
    std::vector<BoundReport> checks;   ///< z >= 1e9 only
    std::vector<SResidual> residuals;  ///< every sample, informational below 1e9
};

/// Samples below 1e9 are recorded as residuals only; samples >= 1e9 are judged
/// against 58/sqrt(z) and against S_1(z) >= log z + 1.32.
[[nodiscard]] SAsymptoticReport verify_S_asymptotic(std::span<const std::uint64_t> z_samples,
                                                    std::uint64_t prime_cutoff = 100'000'000);

[[nodiscard]] Json to_json(const SAsymptoticReport& r);

} // namespace wbt
