#include "oracles.hpp"

#include <wbt/arith_tab.hpp>
#include <wbt/constants.hpp>
#include <wbt/errors.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace wbt;

namespace {

constexpr double kPi = std::numbers::pi;

const PrimeTable& primes()
{
    static const PrimeTable t = PrimeTable::up_to(1'000'000);
    return t;
}

bool all_pass(const std::vector<ConstantsReport>& rs)
{
    for (const auto& r : rs)
        if (!r.verdict) {
            ADD_FAILURE() << r.name << ": " << r.computed << ' ' << r.relation << ' ' << r.paper_bound;
            return false;
        }
    return true;
}

// Local factor written out from the product definitions, long double.
long double product_oracle(bool h_variant, bool tilde, long double s, std::uint64_t cutoff)
{
    const long double c = h_variant ? 2 : 1;
    long double prod = 1;
    for (std::uint64_t p = 2; p < cutoff; ++p) {
        if (!oracle::is_prime_trial(p))
            continue;
        const long double ps = std::pow(static_cast<long double>(p), s);
        prod *= 1 + c / ((p - 1) * (tilde ? ps - 1 : ps + 1));
    }
    return prod;
}

} // namespace

TEST(Zeta, AgainstBorwein)
{
    for (double s : {1.5, 2.0, 3.0, 4.0, 1.375, 2.75}) {
        const auto o = oracle::zeta_borwein(s);
        EXPECT_NEAR(zeta(s), static_cast<double>(o.value), 1e-12) << s;
        EXPECT_NEAR(zeta_derivative(s), static_cast<double>(o.derivative), 1e-10) << s;
    }
    EXPECT_NEAR(zeta(2.0), kPi * kPi / 6, 1e-10);
    EXPECT_NEAR(zeta(4.0), std::pow(kPi, 4) / 90, 1e-10);
    EXPECT_THROW((void)zeta(1.0), PreconditionError);
    EXPECT_THROW((void)zeta(2.0, 5), PreconditionError);
}

TEST(Zeta, ReportedConstants)
{
    const auto rs = zeta_constants();
    EXPECT_TRUE(all_pass(rs));
    const auto o = std::pow(oracle::zeta_borwein(1.5).value / oracle::zeta_borwein(3).value, 3);
    EXPECT_LE(o, 10.27L);
    EXPECT_NEAR(rs.back().computed, static_cast<double>(o), 1e-9);
}

TEST(EulerProducts, HVariantAtOne)
{
    for (std::uint64_t P : {1'000u, 10'000u, 1'000'000u}) {
        const auto r = euler_product({EulerVariant::H_lemma, false, 1.0, P, TailStrategy::none}, primes());
        EXPECT_LT(r.partial, 2.5);
        EXPECT_LE(2.5 - r.partial, 2.0 / (P - 1.0)) << P;
        EXPECT_EQ(r.bound, r.partial);
    }
    const auto big = euler_product({EulerVariant::H_lemma, false, 1.0, 1'000'000, TailStrategy::none}, primes());
    EXPECT_LE(std::abs(big.partial - 2.5), 1e-5);
}

TEST(EulerProducts, SVariantAtOne)
{
    const auto r = euler_product({EulerVariant::S_lemma, false, 1.0, 1'000'000, TailStrategy::none}, primes());
    EXPECT_LE(std::abs(r.partial - static_cast<double>(oracle::zeta_borwein(2).value)), 1e-5);
}

TEST(EulerProducts, MatchOracle)
{
    for (bool h : {true, false})
        for (bool tilde : {true, false})
            for (double s : {0.375, 0.5, 1.0}) {
                const auto r = euler_product({h ? EulerVariant::H_lemma : EulerVariant::S_lemma, tilde, s, 5'000,
                                              TailStrategy::none},
                                             primes());
                EXPECT_NEAR(r.partial, static_cast<double>(product_oracle(h, tilde, s, 5'000)), 1e-12 * r.partial);
            }
}

TEST(EulerProducts, MonotoneAndCertified)
{
    for (auto v : {EulerVariant::H_lemma, EulerVariant::S_lemma})
        for (double s : {0.25, 0.375, 0.5, 1.0}) {
            double prev = 0;
            double bound = 0;
            for (std::uint64_t P : {20u, 100u, 1'000u, 10'000u, 100'000u, 1'000'000u}) {
                const auto r = euler_product({v, true, s, P, TailStrategy::zeta_ratio_bound}, primes());
                EXPECT_GE(r.partial, prev);
                EXPECT_GE(r.bound, r.partial);
                prev = r.partial;
                bound = r.bound;
            }
            // the largest partial product must sit under every certificate
            for (std::uint64_t P : {20u, 1'000u, 10'000u}) {
                const auto r = euler_product({v, true, s, P, TailStrategy::zeta_ratio_bound}, primes());
                EXPECT_GE(r.bound * (1 + 1e-12), prev) << P;
            }
            (void)bound;
        }
}

TEST(EulerProducts, TailExponents)
{
    const auto& p = primes();
    EXPECT_EQ(euler_product({EulerVariant::H_lemma, true, 0.5, 16, TailStrategy::zeta_ratio_bound}, p).tail_exponent,
              3);
    EXPECT_EQ(euler_product({EulerVariant::H_lemma, true, 0.375, 20, TailStrategy::zeta_ratio_bound}, p).tail_exponent,
              4);
    EXPECT_EQ(euler_product({EulerVariant::S_lemma, true, 0.5, 20, TailStrategy::zeta_ratio_bound}, p).tail_exponent,
              2);
    EXPECT_THROW((void)euler_product({EulerVariant::H_lemma, true, 0.5, 10, TailStrategy::zeta_ratio_bound}, p),
                 PreconditionError);
    EXPECT_THROW((void)euler_product({EulerVariant::S_lemma, true, 0.2, 100, TailStrategy::zeta_ratio_bound}, p),
                 PreconditionError);
    const PrimeTable small = PrimeTable::up_to(100);
    EXPECT_THROW((void)euler_product({EulerVariant::S_lemma, false, 1.0, 1000, TailStrategy::none}, small),
                 RangeError);
}

TEST(EulerProducts, HalfBoundPieces)
{
    const auto r = euler_product({EulerVariant::H_lemma, true, 0.5, 10'000, TailStrategy::zeta_ratio_bound}, primes());
    EXPECT_LE(r.reduced, 3.5);
    EXPECT_LE(r.zeta_ratio, 10.27);
    EXPECT_LE(r.bound, 36.0);
    // reduced product re-derived from the definitions in long double
    long double red = 1;
    for (std::uint64_t p = 2; p < 10'000; ++p)
        if (oracle::is_prime_trial(p)) {
            const long double sp = std::sqrt(static_cast<long double>(p));
            red *= (1 + 2 / ((p - 1) * (sp - 1))) / std::pow(1 + 1 / (p * sp), 3);
        }
    EXPECT_NEAR(r.reduced, static_cast<double>(red), 1e-12);
}

TEST(LemmaConstants, Reports)
{
    EXPECT_TRUE(all_pass(h_lemma_constants()));
    const auto s = s_lemma_constants();
    EXPECT_TRUE(all_pass(s));
    EXPECT_EQ(s.size(), 3u);
}

TEST(ConstantA, ThreeWaysAgree)
{
    const ConstantA a = constant_A();
    EXPECT_TRUE(all_pass(a.reports));
    EXPECT_LE(a.recipe_bound, 1.8);
    const auto z2 = oracle::zeta_borwein(2);
    const double closed = static_cast<double>(oracle::kEulerGammaL / z2.value - 2 * z2.derivative / (z2.value * z2.value));
    EXPECT_NEAR(a.closed_form, closed, 1e-10);
    EXPECT_LE(std::abs(a.truncated - closed), a.truncation_error);
    EXPECT_NEAR(a.truncated, closed, 1e-6);
    EXPECT_THROW((void)constant_A(50), PreconditionError);
    EXPECT_NEAR((std::log(100.0) + 1) / 100, 0.056051701859880914, 1e-15);
}

TEST(Elementary, Grids)
{
    const auto rs = elementary_inequalities();
    EXPECT_EQ(rs.size(), 6u);
    EXPECT_TRUE(all_pass(rs));
}

TEST(HAsymptotic, Examples)
{
    const ArithTable t = tabulate(1, 100);
    const std::uint64_t one[] = {1};
    const auto a = verify_H_asymptotic(one, t);
    EXPECT_NEAR(*a.lhs, 15 / (kPi * kPi) - 1, 1e-12);
    EXPECT_TRUE(a.holds);
    const std::uint64_t four[] = {4};
    const auto b = verify_H_asymptotic(four, t);
    EXPECT_NEAR(*b.lhs * 2, std::abs(6 - 60 / (kPi * kPi)), 1e-12);
    const std::uint64_t far[] = {1000};
    EXPECT_THROW((void)verify_H_asymptotic(far, t), RangeError);
}

TEST(HAsymptotic, DenseSweep)
{
    const auto r = verify_H_dense(200'000);
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(r.params["H1_z_max"].get<double>(), static_cast<double>(oracle::H(1, 200'000)), 1e-8);
    EXPECT_THROW((void)verify_H_dense(0), PreconditionError);
}

TEST(ConstantB, Enclosure)
{
    const ConstantB b = constant_B(1'000'000);
    EXPECT_LT(b.lower, b.upper);
    // gamma + sum_p log p / (p(p-1)) to 12 digits
    EXPECT_LE(b.lower, 1.3325822757332);
    EXPECT_GE(b.upper, 1.3325822757332);
    EXPECT_THROW((void)constant_B(10), PreconditionError);
}

TEST(SAsymptotic, DeskScale)
{
    const std::vector<std::uint64_t> zs{4, 1000, 100'000, 10'000'000};
    const auto r = verify_S_asymptotic(zs, 1'000'000);
    EXPECT_TRUE(r.small_prime_floor.verdict);
    EXPECT_GE(r.small_prime_floor.computed, 1.32);
    EXPECT_TRUE(r.checks.empty());
    ASSERT_EQ(r.residuals.size(), zs.size());
    EXPECT_DOUBLE_EQ(r.residuals[0].S1, 2.5);
    for (const auto& s : r.residuals)
        if (s.z >= 1000)
            EXPECT_LE(std::abs(s.residual), s.scale) << s.z;
    const Json j = to_json(r);
    EXPECT_FALSE(j["residuals"][3]["judged"].get<bool>());
}
