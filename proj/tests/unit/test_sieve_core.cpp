#include "oracles.hpp"

#include <wbt/arith_tab.hpp>
#include <wbt/errors.hpp>
#include <wbt/sieve_core.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace wbt;

namespace {

const ArithTable& table()
{
    static const ArithTable t = tabulate(1, 2000);
    return t;
}

WeightFunction constant(double x, double y) { return builtin(Shape::constant, Interval(x, y), 1); }

// sum of f(n) over n in I, n = l mod k, gcd(n, p) = 1 for all sifting primes p
long double sifted_oracle(const WeightFunction& f, std::uint64_t k, std::int64_t l, std::uint64_t z)
{
    const auto ps = oracle::sifting_primes(z, k);
    return oracle::walk_sum(f.left(), f.right(), [&](double t) { return f(t); }, [&](long long n) {
        if (oracle::mod(n - l, static_cast<long long>(k)) != 0)
            return false;
        for (auto p : ps)
            if (n % static_cast<long long>(p) == 0)
                return false;
        return true;
    });
}

WeightFunction random_builtin(std::mt19937_64& rng, double max_y)
{
    const Shape s = static_cast<Shape>(std::uniform_int_distribution<int>(0, 3)(rng));
    const double x = std::uniform_real_distribution<double>(0, 1e5)(rng);
    const double y = std::uniform_real_distribution<double>(0, max_y)(rng);
    const double c = std::uniform_real_distribution<double>(0.05, 20)(rng);
    return builtin(s, Interval(x, y), 32).scaled(c);
}

std::pair<std::uint64_t, std::int64_t> random_progression(std::mt19937_64& rng, std::uint64_t kmax)
{
    for (;;) {
        const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, kmax)(rng);
        const auto l = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng);
        if (std::gcd(static_cast<std::uint64_t>(oracle::mod(l, static_cast<long long>(k))), k) == 1)
            return {k, l};
    }
}

} // namespace

TEST(SieveParams, Validation)
{
    EXPECT_NO_THROW(SieveParams(1, 0, 1));
    EXPECT_THROW(SieveParams(0, 1, 5), PreconditionError);
    EXPECT_THROW(SieveParams(4, 2, 5), PreconditionError);
    EXPECT_THROW(SieveParams(3, 1, 0), PreconditionError);
    EXPECT_EQ(SieveParams(7, -1, 5).residue(), 6u);
}

TEST(SieveSums, Examples)
{
    const auto& t = table();
    EXPECT_DOUBLE_EQ(sieve_sum_S(SieveParams(1, 0, 1), t), 1.0);
    EXPECT_DOUBLE_EQ(sieve_sum_S(SieveParams(1, 0, 4), t), 2.5);
    EXPECT_DOUBLE_EQ(sieve_sum_S(SieveParams(2, 1, 4), t), 1.5);
    EXPECT_DOUBLE_EQ(sieve_sum_H(SieveParams(1, 0, 1), t), 1.0);
    EXPECT_DOUBLE_EQ(sieve_sum_H(SieveParams(1, 0, 4), t), 6.0);
    EXPECT_THROW((void)sieve_sum_S(SieveParams(1, 0, 5000), t), RangeError);
}

TEST(SieveSums, MatchOracleAndMonotone)
{
    const auto& t = table();
    for (std::uint64_t k : {1u, 2u, 3u, 6u, 7u, 30u}) {
        double prevS = 0, prevH = 0;
        for (std::uint64_t z = 1; z <= 300; ++z) {
            const SieveParams p(k, 1, z);
            const double s = sieve_sum_S(p, t), h = sieve_sum_H(p, t);
            ASSERT_NEAR(s, static_cast<double>(oracle::S(k, z)), 1e-12 * s);
            ASSERT_NEAR(h, static_cast<double>(oracle::H(k, z)), 1e-12 * h);
            ASSERT_GE(s, prevS);
            ASSERT_GE(h, prevH);
            ASSERT_LE(s, sieve_sum_S(SieveParams(1, 0, z), t));
            ASSERT_LE(h, sieve_sum_H(SieveParams(1, 0, z), t));
            prevS = s;
            prevH = h;
        }
    }
}

TEST(SieveSums, StreamingMatchesTable)
{
    const std::vector<std::uint64_t> zs{1, 4, 50, 999, 1000, 1777, 2000};
    const auto got = sieve_sums_at(zs, 256);
    ASSERT_EQ(got.size(), zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        EXPECT_EQ(got[i].z, zs[i]);
        EXPECT_NEAR(got[i].S1, static_cast<double>(oracle::S(1, zs[i])), 1e-12 * got[i].S1);
        EXPECT_NEAR(got[i].H1, static_cast<double>(oracle::H(1, zs[i])), 1e-12 * got[i].H1);
        EXPECT_EQ(got[i].pi, oracle::pi(zs[i]));
    }
}

TEST(Selberg, SmallestLevel)
{
    const auto w = selberg_lambda(SieveParams(1, 0, 1), table());
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w.entries[0].first, 1u);
    EXPECT_EQ(w.entries[0].second, 1.0);
    EXPECT_EQ(w.at(2), 0.0);
}

TEST(Selberg, IdentitiesAndBounds)
{
    const auto& t = table();
    for (std::uint64_t k : {1u, 2u, 3u, 6u, 30u}) {
        for (std::uint64_t z : {2u, 10u, 50u, 100u, 300u}) {
            const SieveParams p(k, 1, z);
            const auto w = selberg_lambda(p, t);
            const long double S = oracle::S(k, z), H = oracle::H(k, z);
            const double q = selberg_quadratic_form(w);
            const double a = lambda_abs_sum(w);
            EXPECT_LE(std::abs(q - 1.0L / S), 1e-10 / S) << k << ' ' << z;
            EXPECT_LE(std::abs(a - H / S), 1e-10 * H / S) << k << ' ' << z;
            EXPECT_EQ(w.at(1), 1.0);
            for (const auto& [n, lam] : w.entries) {
                EXPECT_LE(std::abs(lam), 1.0 + 1e-15) << n;
                EXPECT_EQ(std::gcd(n, k), 1u);
                EXPECT_NE(oracle::arith(n).mu, 0);
            }
        }
    }
}

TEST(Selberg, LambdaClosedForm)
{
    // lambda_n = mu(n) n/phi(n) S_{kn}(z/n) / S_k(z), evaluated from the trial-division oracle
    const auto& t = table();
    const std::uint64_t k = 6, z = 120;
    const auto w = selberg_lambda(SieveParams(k, 1, z), t);
    const long double S = oracle::S(k, z);
    for (std::uint64_t n = 1; n <= z; ++n) {
        const auto a = oracle::arith(n);
        long double expect = 0;
        if (a.mu != 0 && std::gcd(n, k) == 1)
            expect = a.mu * static_cast<long double>(n) / a.phi * oracle::S(k * n, z / n) / S;
        EXPECT_NEAR(w.at(n), static_cast<double>(expect), 1e-13) << n;
    }
}

TEST(Selberg, LevelCap)
{
    const ArithTable big = tabulate(1, kMaxLambdaLevel + 1);
    EXPECT_THROW((void)selberg_lambda(SieveParams(1, 0, kMaxLambdaLevel + 1), big), ResourceError);
}

TEST(Remainder, Examples)
{
    EXPECT_DOUBLE_EQ(remainder_r(constant(0, 10), 1, 0, 1), 1.0);
    EXPECT_EQ(remainder_r(constant(0, 10).scaled(0), 5, 2, 3), 0.0);
    EXPECT_DOUBLE_EQ(remainder_r(constant(0.5, 9), 3, 1, 2), -0.5);
    EXPECT_THROW((void)remainder_r(constant(0, 10), 4, 1, 2), PreconditionError);
}

TEST(Remainder, RandomBoundHolds)
{
    std::mt19937_64 rng(1234);
    int cases = 0;
    while (cases < 1000) {
        const auto f = random_builtin(rng, 1000);
        const auto [k, l] = random_progression(rng, 50);
        const std::uint64_t d = std::uniform_int_distribution<std::uint64_t>(1, 50)(rng);
        if (std::gcd(d, k) != 1)
            continue;
        ++cases;
        const double r = remainder_r(f, k, l, d);
        const long long kd = static_cast<long long>(k * d);
        const long double direct =
            oracle::walk_sum(f.left(), f.right(), [&](double t) { return f(t); }, [&](long long n) {
                return oracle::mod(n - l, static_cast<long long>(k)) == 0 && n % static_cast<long long>(d) == 0;
            }) -
            f.norms().l1 / kd;
        ASSERT_NEAR(r, static_cast<double>(direct), 1e-9 * (1 + f.norms().l1));
        const Norms n = f.norms();
        ASSERT_LE(std::abs(r), n.sup + n.tv + 1e-9 * (1 + n.l1));
    }
}

TEST(SelbergBound, Examples)
{
    const auto& t = table();
    const auto a = weighted_selberg_bound(constant(0, 100), SieveParams(1, 0, 1), t);
    EXPECT_EQ(*a.lhs, 101.0);
    EXPECT_DOUBLE_EQ(a.rhs, 101.0);
    EXPECT_TRUE(a.holds);
    EXPECT_EQ(a.relation, Relation::less_equal);

    const auto z = weighted_selberg_bound(constant(0, 100).scaled(0), SieveParams(3, 1, 7), t);
    EXPECT_EQ(*z.lhs, 0.0);
    EXPECT_EQ(z.rhs, 0.0);
    EXPECT_TRUE(z.holds);

    const WeightFunction hat({0, 1, 2}, {0, 1, 0});
    const auto h = weighted_selberg_bound(hat, SieveParams(1, 0, 2), t);
    EXPECT_DOUBLE_EQ(h.rhs, 12.5);
    EXPECT_EQ(*h.lhs, 1.0);
    EXPECT_TRUE(h.holds);

    const auto b = weighted_selberg_bound(hat, SieveParams(1, 0, 2), t, LhsMode::bound_only);
    EXPECT_FALSE(b.lhs.has_value());
    EXPECT_DOUBLE_EQ(b.rhs, 12.5);
}

TEST(EratosthenesBound, Examples)
{
    const auto& t = table();
    const auto a = weighted_eratosthenes_bound(constant(0, 100), SieveParams(1, 0, 10), t);
    EXPECT_NEAR(a.rhs, 100.0 * 8.0 / 35.0 + 16.0, 1e-12);
    EXPECT_EQ(*a.lhs, static_cast<double>(sifted_oracle(constant(0, 100), 1, 0, 10)));
    EXPECT_TRUE(a.holds);

    const auto one = weighted_eratosthenes_bound(constant(3, 50).scaled(2), SieveParams(1, 0, 1), t);
    EXPECT_DOUBLE_EQ(one.rhs, 100.0 + 2.0);

    const auto zero = weighted_eratosthenes_bound(constant(0, 50).scaled(0), SieveParams(5, 2, 30), t);
    EXPECT_TRUE(zero.holds);
    EXPECT_THROW((void)weighted_eratosthenes_bound(constant(0, 50), SieveParams(1, 0, 701), tabulate(1, 800)),
                 PreconditionError);
}

TEST(SievedSums, MatchOracle)
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_builtin(rng, 5000);
        const auto [k, l] = random_progression(rng, 30);
        const std::uint64_t z = std::uniform_int_distribution<std::uint64_t>(1, 60)(rng);
        const double got = sifted_sum(f, SieveParams(k, l, z));
        const long double want = sifted_oracle(f, k, l, z);
        ASSERT_NEAR(got, static_cast<double>(want), 1e-10 * (1 + std::abs(got)));
    }
}

TEST(SieveBounds, RandomCorpus)
{
    const auto& t = table();
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_builtin(rng, 1e4);
        const auto [k, l] = random_progression(rng, 20);
        const std::uint64_t z = std::uniform_int_distribution<std::uint64_t>(1, 50)(rng);
        const SieveParams p(k, l, z);
        const long double lhs = sifted_oracle(f, k, l, z);
        const auto sel = weighted_selberg_bound(f, p, t);
        const auto era = weighted_eratosthenes_bound(f, p, t);
        ASSERT_NEAR(*sel.lhs, static_cast<double>(lhs), 1e-10 * (1 + std::abs(*sel.lhs)));
        ASSERT_TRUE(sel.holds) << i << ": " << *sel.lhs << " vs " << sel.rhs;
        ASSERT_TRUE(era.holds) << i << ": " << *era.lhs << " vs " << era.rhs;
    }
}

TEST(SievedSums, Budget)
{
    EXPECT_THROW((void)sifted_sum(constant(0, 1e6), SieveParams(1, 0, 3), 1000), ResourceError);
}
