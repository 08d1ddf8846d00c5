#include "wbt/constants.hpp"

#include "wbt/compensated.hpp"
#include "wbt/errors.hpp"
#include "wbt/primes.hpp"
#include "wbt/sieve_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wbt {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{n=1}^{N} g(n), smallest terms first.
template <class G>
double head_sum(std::uint64_t terms, G&& g)
{
    CompensatedSum s;
    for (std::uint64_t n = terms; n >= 1; --n)
        s += g(static_cast<double>(n));
    return s.value();
}

} // namespace

double zeta(double s, std::uint64_t terms)
{
    detail::require<PreconditionError>(s > 1.0, "zeta: s must exceed 1");
    detail::require<PreconditionError>(terms >= 10, "zeta: need at least 10 terms");
    const double head = head_sum(terms, [s](double n) { return std::pow(n, -s); });
    const double N = static_cast<double>(terms);
    // sum_{n>N} n^-s = int_N^inf - f(N)/2 - f'(N)/12 + f'''(N)/720 - ...
    const double tail = std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s) + s * std::pow(N, -s - 1.0) / 12.0 -
                        s * (s + 1.0) * (s + 2.0) * std::pow(N, -s - 3.0) / 720.0;
    return head + tail;
}

double zeta_derivative(double s, std::uint64_t terms)
{
    detail::require<PreconditionError>(s > 1.0, "zeta_derivative: s must exceed 1");
    detail::require<PreconditionError>(terms >= 10, "zeta_derivative: need at least 10 terms");
    const double head = head_sum(terms, [s](double n) { return std::log(n) * std::pow(n, -s); });
    const double N = static_cast<double>(terms);
    const double L = std::log(N);
    const double integral = std::pow(N, 1.0 - s) * (L / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    const double f = L * std::pow(N, -s);
    const double df = std::pow(N, -s - 1.0) * (1.0 - s * L);
    return -(head + integral - 0.5 * f - df / 12.0);
}

PrimeTable PrimeTable::up_to(std::uint32_t limit)
{
    return {primes_up_to(limit), limit};
}

EulerProductResult euler_product(const EulerProductSpec& spec, const PrimeTable& primes)
{
    detail::require<PreconditionError>(spec.cutoff >= 2, "euler_product: cutoff must be >= 2");
    detail::require<PreconditionError>(spec.s > 0.0, "euler_product: s must be > 0");
    detail::require<RangeError>(primes.limit + 1 >= spec.cutoff, "euler_product: prime list does not reach cutoff");

    const double c = spec.variant == EulerVariant::H_lemma ? 2.0 : 1.0;
    const double s = spec.s;

    int e = 0;
    if (spec.tail == TailStrategy::zeta_ratio_bound) {
        if (spec.variant == EulerVariant::H_lemma && s == 0.5) {
            detail::require<PreconditionError>(spec.cutoff >= 16, "euler_product: tail needs cutoff >= 16");
            e = 3;
        } else {
            detail::require<PreconditionError>(s >= 0.25 && spec.cutoff >= 20,
                                               "euler_product: tail needs s >= 1/4 and cutoff >= 20");
            e = spec.variant == EulerVariant::S_lemma ? 2 : 4;
        }
    }

    double partial = 1.0;
    double reduced = 1.0;
    for (const std::uint32_t p32 : primes.primes) {
        if (p32 >= spec.cutoff)
            break;
        const double p = p32;
        const double ps = std::pow(p, s);
        const double den = (spec.tilde ? ps - 1.0 : 1.0 + ps) * (p - 1.0);
        const double factor = 1.0 + c / den;
        partial *= factor;
        if (e > 0)
            reduced *= factor / std::pow(1.0 + std::pow(p, -1.0 - s), e);
    }

    EulerProductResult r;
    r.partial = partial;
    r.tail_exponent = e;
    if (e > 0) {
        r.reduced = reduced;
        r.zeta_ratio = std::pow(zeta(1.0 + s) / zeta(2.0 + 2.0 * s), e);
        r.bound = reduced * r.zeta_ratio;
    } else {
        r.reduced = partial;
        r.zeta_ratio = 1.0;
        r.bound = partial;
    }
    return r;
}

std::vector<ConstantsReport> zeta_constants()
{
    std::vector<ConstantsReport> out;
    const double z2 = zeta(2.0);
    const double z4 = zeta(4.0);
    const double z32 = zeta(1.5);
    const double z3 = zeta(3.0);
    out.push_back(check_close("zeta(2) = pi^2/6", z2, kPi * kPi / 6.0, 1e-10));
    out.push_back(check_close("zeta(4) = pi^4/90", z4, std::pow(kPi, 4) / 90.0, 1e-10));
    // no closed form: compare two truncation depths
    out.push_back(check_close("zeta(3/2) truncation-stable", z32, zeta(1.5, 100'000), 1e-10));
    out.push_back(check_close("zeta(3) truncation-stable", z3, zeta(3.0, 100'000), 1e-10));
    out.push_back(check_upper("zeta(3/2)^3 / zeta(3)^3", std::pow(z32 / z3, 3), 10.27));
    return out;
}

std::vector<ConstantsReport> h_lemma_constants()
{
    std::vector<ConstantsReport> out;
    const PrimeTable primes = PrimeTable::up_to(1'000'000);
    for (const std::uint64_t cutoff : {1'000ULL, 10'000ULL, 1'000'000ULL}) {
        const auto r = euler_product({EulerVariant::H_lemma, false, 1.0, cutoff, TailStrategy::none}, primes);
        // partial product < 5/2 and 5/2 - partial <= 2/(P-1)
        out.push_back(check_close("H: h(1) partial product, cutoff " + std::to_string(cutoff), r.partial, 2.5,
                                  2.0 / static_cast<double>(cutoff - 1)));
    }
    const auto t = euler_product({EulerVariant::H_lemma, true, 0.5, 10'000, TailStrategy::zeta_ratio_bound}, primes);
    out.push_back(check_upper("H: reduced product over p < 10^4 for h~(1/2)", t.reduced, 3.5));
    out.push_back(check_upper("H: zeta(3/2)^3/zeta(3)^3 tail factor", t.zeta_ratio, 10.27));
    out.push_back(check_upper("H: certified h~(1/2)", t.bound, 36.0));
    return out;
}

std::vector<ConstantsReport> s_lemma_constants()
{
    std::vector<ConstantsReport> out;
    const PrimeTable primes = PrimeTable::up_to(1'000'000);
    const auto h1 = euler_product({EulerVariant::S_lemma, false, 1.0, 1'000'000, TailStrategy::none}, primes);
    out.push_back(check_close("S: h(1) partial product vs zeta(2), cutoff 10^6", h1.partial, kPi * kPi / 6.0,
                              zeta(2.0) * 1.0 / (1'000'000.0 - 1.0)));
    const auto t38 =
        euler_product({EulerVariant::S_lemma, true, 0.375, 10'000, TailStrategy::zeta_ratio_bound}, primes);
    out.push_back(check_upper("S: certified h~(3/8)", t38.bound, 19.0));
    const auto t12 = euler_product({EulerVariant::S_lemma, true, 0.5, 10'000, TailStrategy::zeta_ratio_bound}, primes);
    out.push_back(check_upper("S: certified h~(1/2)", t12.bound, 9.4));
    return out;
}

ConstantA constant_A(std::uint64_t truncation)
{
    detail::require<PreconditionError>(truncation >= 100, "constant_A: truncation must be >= 100");
    ConstantA a;
    a.truncation = truncation;
    const double z2 = zeta(2.0);
    const ArithTable tab = tabulate(1, truncation);

    auto mobius_log_sum = [&](std::uint64_t n_max) {
        CompensatedSum s;
        for (std::uint64_t d = n_max; d >= 2; --d)
            if (tab.mu(d) != 0) {
                const double dd = static_cast<double>(d);
                s += tab.mu(d) * std::log(dd) / (dd * dd);
            }
        return s.value();
    };

    const double tail100 = (std::log(100.0) + 1.0) / 100.0;
    a.recipe_bound = kEulerGamma / z2 + 2.0 * std::fabs(mobius_log_sum(100)) + 2.0 * tail100;
    a.truncated = kEulerGamma / z2 - 2.0 * mobius_log_sum(truncation);
    const double N = static_cast<double>(truncation);
    a.truncation_error = 2.0 * (std::log(N) + 1.0) / N;
    a.closed_form = kEulerGamma / z2 - 2.0 * zeta_derivative(2.0) / (z2 * z2);

    a.reports.push_back(check_upper("|A| via truncation at 100", a.recipe_bound, 1.8));
    a.reports.push_back(check_upper("|A| truncated series", std::fabs(a.truncated) + a.truncation_error, 1.8));
    a.reports.push_back(check_close("A: truncated series vs closed form", a.truncated, a.closed_form,
                                    a.truncation_error));
    return a;
}

std::vector<ConstantsReport> elementary_inequalities()
{
    std::vector<ConstantsReport> out;
    constexpr int kGrid = 4000;
    auto log_grid = [](double a, double b, int i) { return a * std::pow(b / a, static_cast<double>(i) / kGrid); };

    double worst = HUGE_VAL;
    for (int i = 0; i <= kGrid; ++i) {
        const double t = log_grid(16.0, 1e6, i);
        worst = std::min(worst, (std::sqrt(t) - 1.0) * (t - 1.0) / (2.0 / 3.0 * std::pow(t, 1.5)));
    }
    out.push_back(check_lower("min (sqrt t - 1)(t - 1) / (2/3 t^{3/2}), t in [16, 1e6]", worst, 1.0));

    for (const double sigma : {0.25, 0.375, 0.5, 1.0}) {
        worst = HUGE_VAL;
        for (int i = 0; i <= kGrid; ++i) {
            const double t = log_grid(20.0, 1e6, i);
            const double lhs = std::pow(t, 1.0 + sigma) - std::pow(t, sigma) - t + 1.0;
            worst = std::min(worst, lhs / (0.5 * std::pow(t, 1.0 + sigma)));
        }
        out.push_back(check_lower("min (t^{1+s} - t^s - t + 1) / (t^{1+s}/2), s = " + std::to_string(sigma) +
                                      ", t in [20, 1e6]",
                                  worst, 1.0));
    }

    worst = HUGE_VAL;
    for (int i = 0; i <= kGrid; ++i) {
        const double z = log_grid(1e9, 1e30, i);
        worst = std::min(worst, 1.56 * std::pow(z, 0.125) / std::log(z));
    }
    out.push_back(check_lower("min 1.56 z^{1/8} / log z, z in [1e9, 1e30]", worst, 1.0));
    return out;
}

namespace {

constexpr double kHDensity = 15.0 / (kPi * kPi);
constexpr double kHConstant = 47.0;

} // namespace

BoundReport verify_H_asymptotic(std::span<const std::uint64_t> z_samples, const ArithTable& tab)
{
    double worst = 0.0;
    std::uint64_t witness = 0;
    std::vector<std::uint64_t> zs(z_samples.begin(), z_samples.end());
    std::sort(zs.begin(), zs.end());
    if (!zs.empty())
        detail::require<PreconditionError>(zs.front() >= 1, "verify_H_asymptotic: samples must be >= 1");
    if (!zs.empty() && !tab.covers(1, zs.back()))
        throw RangeError("verify_H_asymptotic: table does not cover the samples");

    CompensatedSum h;
    std::uint64_t n = 0;
    for (const std::uint64_t z : zs) {
        for (; n < z;) {
            ++n;
            if (tab.mu(n) != 0)
                h += static_cast<double>(tab.sigma(n)) / static_cast<double>(tab.phi(n));
        }
        const double dz = static_cast<double>(z);
        const double err = std::fabs(h.value() - kHDensity * dz) / std::sqrt(dz);
        if (err > worst) {
            worst = err;
            witness = z;
        }
    }
    Json params;
    params["samples"] = zs.size();
    params["witness_z"] = witness;
    return make_bound_report("H_1(z) error ratio |H_1(z) - 15z/pi^2| / sqrt(z) at samples", worst, kHConstant,
                             Relation::less_equal, 0.0, std::move(params));
}

BoundReport verify_H_dense(std::uint64_t z_max)
{
    detail::require<PreconditionError>(z_max >= 1, "verify_H_dense: z_max must be >= 1");
    double worst = -1.0;
    std::uint64_t witness = 1;
    bool witness_left = false;
    CompensatedSum h;
    for_each_segment(1, z_max, kDefaultSegmentLength, [&](const Segment& seg) {
        for (std::uint64_t i = 0; i < seg.length; ++i) {
            const std::uint64_t n = seg.base + i;
            const double dn = static_cast<double>(n);
            const double root = std::sqrt(dn);
            if (n >= 2) {
                const double left = std::fabs(h.value() - kHDensity * dn) / root;
                if (left > worst) {
                    worst = left;
                    witness = n;
                    witness_left = true;
                }
            }
            if (seg.mu[i] != 0)
                h += static_cast<double>(seg.sigma[i]) / static_cast<double>(seg.phi[i]);
            const double at = std::fabs(h.value() - kHDensity * dn) / root;
            if (at > worst) {
                worst = at;
                witness = n;
                witness_left = false;
            }
        }
    });
    Json params;
    params["z_max"] = z_max;
    params["witness_z"] = witness;
    params["witness_side"] = witness_left ? "left_limit" : "at";
    params["H1_z_max"] = h.value();
    return make_bound_report("H_1(z) error ratio |H_1(z) - 15z/pi^2| / sqrt(z) over [1, z_max]", worst, kHConstant,
                             Relation::less_equal, 0.0, std::move(params));
}

ConstantB constant_B(std::uint64_t prime_cutoff)
{
    detail::require<PreconditionError>(prime_cutoff >= 1000, "constant_B: cutoff must be >= 1000");
    CompensatedSum s;
    PrimeRange(2, prime_cutoff - 1).for_each([&](std::uint64_t p) {
        const double dp = static_cast<double>(p);
        s += std::log(dp) / (dp * (dp - 1.0));
    });
    const double P = static_cast<double>(prime_cutoff);
    ConstantB b;
    b.cutoff = prime_cutoff;
    b.lower = kEulerGamma + s.value();
    b.upper = b.lower + 1.1 * (std::log(P) + 1.0) / (P - 1.0);
    return b;
}

SAsymptoticReport verify_S_asymptotic(std::span<const std::uint64_t> z_samples, std::uint64_t prime_cutoff)
{
    SAsymptoticReport r;
    r.B = constant_B(prime_cutoff);

    CompensatedSum small;
    PrimeRange(2, 999).for_each([&](std::uint64_t p) {
        const double dp = static_cast<double>(p);
        small += std::log(dp) / (dp * (dp - 1.0));
    });
    r.small_prime_floor = check_lower("gamma + sum_{p<1000} log p/(p(p-1)) - 0.002",
                                      kEulerGamma + small.value() - 0.002, 1.32);

    const auto sums = sieve_sums_at(z_samples);
    const double mid = 0.5 * (r.B.lower + r.B.upper);
    for (const SieveSums& s : sums) {
        const double dz = static_cast<double>(s.z);
        const double logz = std::log(dz);
        const double scale = 58.0 / std::sqrt(dz);
        r.residuals.push_back({s.z, s.S1, s.S1 - logz - mid, scale});
        if (s.z < 1'000'000'000ULL)
            continue;
        const double worst = std::max(std::fabs(s.S1 - logz - r.B.lower), std::fabs(s.S1 - logz - r.B.upper));
        Json params;
        params["z"] = s.z;
        params["S1"] = s.S1;
        r.checks.push_back(make_bound_report("|S_1(z) - log z - B| <= 58/sqrt(z)", worst, scale,
                                             Relation::less_equal, 0.0, params));
        r.checks.push_back(make_bound_report("log z + 1.32 <= S_1(z)", logz + 1.32, s.S1, Relation::less_equal, 0.0,
                                             std::move(params)));
    }
    return r;
}

Json to_json(const SAsymptoticReport& r)
{
    Json j;
    j["B_lower"] = r.B.lower;
    j["B_upper"] = r.B.upper;
    j["B_prime_cutoff"] = r.B.cutoff;
    j["small_prime_floor"] = to_json(r.small_prime_floor);
    j["checks"] = to_json(r.checks);
    Json res = Json::array();
    for (const auto& s : r.residuals) {
        Json e;
        e["z"] = s.z;
        e["S1"] = s.S1;
        e["residual"] = s.residual;
        e["scale_58_over_sqrt_z"] = s.scale;
        e["judged"] = s.z >= 1'000'000'000ULL;
        res.push_back(e);
    }
    j["residuals"] = res;
    return j;
}

} // namespace wbt
