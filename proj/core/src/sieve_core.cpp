#include "wbt/sieve_core.hpp"

#include "wbt/compensated.hpp"
#include "wbt/errors.hpp"
#include "wbt/number_theory.hpp"
#include "wbt/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace wbt {

SieveParams::SieveParams(std::uint64_t k, std::int64_t l, std::uint64_t z)
    : k_(k), l_(l), residue_(0), z_(z)
{
    detail::require<PreconditionError>(k >= 1, "SieveParams: k must be >= 1");
    detail::require<PreconditionError>(z >= 1, "SieveParams: z must be >= 1");
    residue_ = mod_floor(l, k);
    detail::require<PreconditionError>(std::gcd(residue_, k) == 1, "SieveParams: gcd(l, k) must be 1");
}

double LambdaWeights::at(std::uint64_t n) const
{
    const auto it = std::lower_bound(entries.begin(), entries.end(), n,
                                     [](const auto& e, std::uint64_t v) { return e.first < v; });
    return (it != entries.end() && it->first == n) ? it->second : 0.0;
}

namespace {

void require_coverage(const ArithTable& tab, std::uint64_t z)
{
    if (!tab.covers(1, z))
        throw RangeError("sieve sums: table does not cover [1, " + std::to_string(z) + "]");
}

} // namespace

double sieve_sum_S(const SieveParams& p, const ArithTable& tab)
{
    require_coverage(tab, p.z());
    CompensatedSum s;
    for (std::uint64_t n = 1; n <= p.z(); ++n)
        if (tab.mu(n) != 0 && std::gcd(n, p.k()) == 1)
            s += 1.0 / static_cast<double>(tab.phi(n));
    return s.value();
}

double sieve_sum_H(const SieveParams& p, const ArithTable& tab)
{
    require_coverage(tab, p.z());
    CompensatedSum s;
    for (std::uint64_t n = 1; n <= p.z(); ++n)
        if (tab.mu(n) != 0 && std::gcd(n, p.k()) == 1)
            s += static_cast<double>(tab.sigma(n)) / static_cast<double>(tab.phi(n));
    return s.value();
}

LambdaWeights selberg_lambda(const SieveParams& p, const ArithTable& tab)
{
    detail::require<ResourceError>(p.z() <= kMaxLambdaLevel, "selberg_lambda: z above kMaxLambdaLevel");
    require_coverage(tab, p.z());
    const std::uint64_t z = p.z();
    const double total = sieve_sum_S(p, tab);

    LambdaWeights w;
    for (std::uint64_t n = 1; n <= z; ++n) {
        if (tab.mu(n) == 0 || std::gcd(n, p.k()) != 1)
            continue;
        const std::uint64_t nk = n * p.k();
        CompensatedSum partial;
        for (std::uint64_t m = 1; m <= z / n; ++m)
            if (tab.mu(m) != 0 && std::gcd(m, nk) == 1)
                partial += 1.0 / static_cast<double>(tab.phi(m));
        const double ratio = static_cast<double>(n) / static_cast<double>(tab.phi(n));
        w.entries.emplace_back(n, tab.mu(n) * ratio * partial.value() / total);
    }
    w.entries.front().second = 1.0; // exact: S_{k,1}(z) = S_k(z)
    return w;
}

double selberg_quadratic_form(const LambdaWeights& w)
{
    CompensatedSum s;
    for (const auto& [n1, l1] : w.entries) {
        for (const auto& [n2, l2] : w.entries) {
            const auto g = std::gcd(n1, n2);
            const auto lcm = static_cast<uint128>(n1 / g) * n2;
            s += l1 * l2 / static_cast<double>(lcm);
        }
    }
    return s.value();
}

double lambda_abs_sum(const LambdaWeights& w)
{
    CompensatedSum s;
    for (const auto& e : w.entries)
        s += std::fabs(e.second);
    return s.value();
}

namespace {

// Integer range [first, last] of candidates n >= 0 inside the weight's interval.
struct IntRange {
    std::uint64_t first;
    std::uint64_t last;
    bool empty;
};

IntRange integer_span(const WeightFunction& f)
{
    const double a = std::ceil(f.left());
    const double b = std::floor(f.right());
    detail::require<ResourceError>(b < 9.0e15, "integer_span: interval beyond exact integer range");
    if (a > b)
        return {0, 0, true};
    return {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b), false};
}

} // namespace

double remainder_r(const WeightFunction& f, std::uint64_t k, std::int64_t l, std::uint64_t d)
{
    detail::require<PreconditionError>(k >= 1 && d >= 1, "remainder_r: k and d must be >= 1");
    detail::require<PreconditionError>(std::gcd(d, k) == 1, "remainder_r: gcd(d, k) must be 1");
    const std::uint64_t kd = k * d;
    const double main = f.norms().l1 / static_cast<double>(kd);

    const IntRange span = integer_span(f);
    CompensatedSum sum;
    if (!span.empty) {
        const std::uint64_t cls = crt_with_zero(mod_floor(l, k), k, d);
        detail::require<ResourceError>((span.last - span.first) / kd <= kEnumerationBudget,
                                       "remainder_r: too many progression members to enumerate");
        for (std::uint64_t n = first_in_class(span.first, cls, kd); n <= span.last; n += kd)
            sum += f.eval(static_cast<double>(n));
    }
    return sum.value() - main;
}

double sifted_sum(const WeightFunction& f, const SieveParams& p, std::uint64_t budget)
{
    const IntRange span = integer_span(f);
    if (span.empty)
        return 0.0;
    const std::uint64_t k = p.k();
    const std::uint64_t n0 = first_in_class(span.first, p.residue(), k);
    if (n0 > span.last)
        return 0.0;
    const std::uint64_t count = (span.last - n0) / k + 1;
    detail::require<ResourceError>(count <= budget, "sifted_sum: " + std::to_string(count) +
                                                        " progression members exceed the enumeration budget");

    // members are n0 + j k, j in [0, count)
    std::vector<unsigned char> sifted(count, 0);
    for (const std::uint32_t q32 : primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(p.z(), 0xFFFFFFFFu)))) {
        const std::uint64_t q = q32;
        if (k % q == 0)
            continue;
        // n0 + j k = 0 (mod q)  <=>  j = -n0 k^{-1} (mod q)
        const std::uint64_t inv = mod_inverse(k % q, q);
        const std::uint64_t j0 =
            static_cast<std::uint64_t>(static_cast<uint128>((q - n0 % q) % q) * inv % q);
        for (std::uint64_t j = j0; j < count; j += q)
            sifted[j] = 1;
    }
    CompensatedSum sum;
    for (std::uint64_t j = 0; j < count; ++j)
        if (!sifted[j])
            sum += f.eval(static_cast<double>(n0 + j * k));
    return sum.value();
}

std::vector<SieveSums> sieve_sums_at(std::span<const std::uint64_t> zs, std::uint64_t segment_length)
{
    std::vector<SieveSums> out(zs.size());
    if (zs.empty())
        return out;
    std::vector<std::size_t> order(zs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return zs[a] < zs[b]; });
    for (std::size_t i : order)
        detail::require<PreconditionError>(zs[i] >= 1, "sieve_sums_at: z must be >= 1");

    CompensatedSum s1, h1;
    std::uint64_t pi = 0;
    std::size_t next = 0;
    for_each_segment(1, zs[order.back()], segment_length, [&](const Segment& seg) {
        for (std::uint64_t i = 0; i < seg.length; ++i) {
            if (seg.mu[i] != 0) {
                const double phi = static_cast<double>(seg.phi[i]);
                s1 += 1.0 / phi;
                h1 += static_cast<double>(seg.sigma[i]) / phi;
            }
            if (seg.is_prime_at(i))
                ++pi;
            const std::uint64_t n = seg.base + i;
            while (next < order.size() && zs[order[next]] == n)
                out[order[next++]] = {n, s1.value(), h1.value(), pi};
        }
    });
    return out;
}

namespace {

Json base_params(const WeightFunction& f, const SieveParams& p)
{
    const Norms n = f.norms();
    Json j;
    j["k"] = p.k();
    j["l"] = p.l();
    j["z"] = p.z();
    j["x"] = f.left();
    j["y"] = f.right() - f.left();
    j["l1"] = n.l1;
    j["sup"] = n.sup;
    j["tv"] = n.tv;
    return j;
}

constexpr double kRoundingAllowance = 1e-12;

} // namespace

BoundReport weighted_selberg_bound(const WeightFunction& f, const SieveParams& p, const ArithTable& tab,
                                   LhsMode mode)
{
    const Norms n = f.norms();
    const double s = sieve_sum_S(p, tab);
    const double h = sieve_sum_H(p, tab);
    const double ratio = h / s;
    const double rhs = n.l1 / (static_cast<double>(p.k()) * s) + (n.sup + n.tv) * ratio * ratio;

    std::optional<double> lhs;
    if (mode == LhsMode::enumerate)
        lhs = sifted_sum(f, p);

    Json params = base_params(f, p);
    params["S_k"] = s;
    params["H_k"] = h;
    return make_bound_report("weighted Selberg sieve", lhs, rhs, Relation::less_equal, kRoundingAllowance * rhs,
                             std::move(params));
}

BoundReport weighted_eratosthenes_bound(const WeightFunction& f, const SieveParams& p, const ArithTable& tab,
                                        LhsMode mode)
{
    detail::require<PreconditionError>(p.z() <= kMaxEratosthenesLevel,
                                       "weighted_eratosthenes_bound: z must be <= 700");
    require_coverage(tab, p.z());
    const Norms n = f.norms();

    double mertens = 1.0;
    int pi_z = 0;
    for (std::uint64_t q = 2; q <= p.z(); ++q) {
        if (tab.omega(q) == 1 && tab.phi(q) == q - 1) {
            ++pi_z;
            if (p.k() % q != 0)
                mertens *= 1.0 - 1.0 / static_cast<double>(q);
        }
    }
    const double rhs = n.l1 / static_cast<double>(p.k()) * mertens + (n.sup + n.tv) * std::ldexp(1.0, pi_z);

    std::optional<double> lhs;
    if (mode == LhsMode::enumerate)
        lhs = sifted_sum(f, p);

    Json params = base_params(f, p);
    params["mertens_product"] = mertens;
    params["pi_z"] = pi_z;
    return make_bound_report("weighted Eratosthenes sieve", lhs, rhs, Relation::less_equal,
                             kRoundingAllowance * rhs, std::move(params));
}

} // namespace wbt
