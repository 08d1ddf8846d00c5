#pragma once

#include "wbt/report.hpp"
#include "wbt/weights.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <vector>

namespace wbt {

/// Largest interval length weighted_prime_sum will enumerate.
inline constexpr std::uint64_t kPrimeSumBudget = 100'000'000;

/// Largest x accepted for prime sums (base primes up to 1e6).
inline constexpr double kMaxPrimeSumX = 1e12;

/// sum of f(p) over primes p in [x, x+y] with p = l (mod k). Requires gcd(k, l) = 1.
[[nodiscard]] double weighted_prime_sum(const WeightFunction& f, std::uint64_t k, std::int64_t l);

/// pi(z).
[[nodiscard]] std::uint64_t pi_count(std::uint64_t z);

/// pi(x; k, l): primes p <= x with p = l (mod k).
[[nodiscard]] std::uint64_t pi_ap(std::uint64_t x, std::uint64_t k, std::int64_t l);

enum class TheoremForm { T4_with_correction, T4_factor3, T5 };

[[nodiscard]] std::string_view theorem_name(TheoremForm t);

struct TheoremBound {
    TheoremForm theorem = TheoremForm::T5;
    std::optional<double> value; ///< unset when not applicable
    double rho = 0.0;
    bool applicable = false;
};

/// Both bounds for primes = l (mod k):
///   2 ||f||_1 / (phi(k) L) (1 + 8 / L)  and  3 ||f||_1 / (phi(k) L),  L = log(rho / k),
/// applicable only when rho > k.
[[nodiscard]] std::pair<TheoremBound, TheoremBound> theorem4_bounds(const WeightFunction& f, std::uint64_t k);

/// 2 ||f||_1 / log(rho) for k = 1, applicable only when rho > 1.
[[nodiscard]] TheoremBound theorem5_bound(const WeightFunction& f);

/// One corpus case: a builtin weight scaled by `scale` on [x, x+y], summed over p = l (mod k).
struct CorpusCase {
    Shape shape = Shape::constant;
    std::uint64_t k = 1;
    std::int64_t l = 0;
    double x = 0.0;
    double y = 0.0;
    double scale = 1.0;
    int resolution = 64;
};

/// Parses lines `shape kmod lres x y scale resolution` ('#' comments and blank lines skipped).
[[nodiscard]] std::vector<CorpusCase> parse_corpus(std::istream& in);

/// shapes {constant, hat, ramp, bump} x intervals {[0,1e3], [1e6,1e6+1e4], [1e9,1e9+1e5]}
/// x k in {1,2,3,5,12} x every residue coprime to k.
[[nodiscard]] std::vector<CorpusCase> default_corpus();

/// Relative slack on strict theorem checks.
inline constexpr double kTheoremSlack = 1e-9;

/// One report per applicable or inapplicable theorem form per case (T5 only for k = 1).
/// Inapplicable forms are reported with holds = false and params.applicable = false.
[[nodiscard]] std::vector<BoundReport> theorem_corpus_check(const std::vector<CorpusCase>& corpus);

/// Verdict over a corpus result: every applicable report holds.
[[nodiscard]] bool corpus_verdict(const std::vector<BoundReport>& reports);

} // namespace wbt
