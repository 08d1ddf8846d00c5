#include <wbt/compensated.hpp>
#include <wbt/report.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace wbt;

TEST(BoundReport, StrictVerdicts)
{
    EXPECT_TRUE(make_bound_report("a", 1.0, 2.0, Relation::less, 0.5).holds);
    const auto eq = make_bound_report("b", 2.0, 2.0, Relation::less, 0.0);
    EXPECT_FALSE(eq.holds);
    EXPECT_FALSE(eq.inconclusive);
    const auto near = make_bound_report("c", 1.9, 2.0, Relation::less, 0.2);
    EXPECT_FALSE(near.holds);
    EXPECT_TRUE(near.inconclusive);
    EXPECT_FALSE(make_bound_report("d", 3.0, 2.0, Relation::less, 0.0).inconclusive);
}

TEST(BoundReport, NonStrictAndDegenerate)
{
    EXPECT_TRUE(make_bound_report("a", 2.0, 2.0, Relation::less_equal, 0.0).holds);
    EXPECT_TRUE(make_bound_report("b", 2.0 + 1e-13, 2.0, Relation::less_equal, 1e-12).holds);
    EXPECT_FALSE(make_bound_report("c", 2.1, 2.0, Relation::less_equal, 1e-12).holds);
    EXPECT_FALSE(make_bound_report("d", std::nullopt, 2.0, Relation::less_equal, 0.0).holds);
    EXPECT_FALSE(make_bound_report("e", NAN, 2.0, Relation::less_equal, 0.0).holds);
    EXPECT_FALSE(make_bound_report("f", 1.0, NAN, Relation::less, 0.0).holds);
}

TEST(BoundReport, JsonRoundTrip)
{
    Json params;
    params["k"] = 3;
    const auto r = make_bound_report("x", 1.25, 2.5, Relation::less, 1e-9, params);
    const Json j = to_json(r);
    for (const char* key : {"label", "lhs", "rhs", "margin", "slack", "holds", "params"})
        EXPECT_TRUE(j.contains(key)) << key;
    const auto back = bound_report_from_json(j);
    EXPECT_EQ(back.label, r.label);
    EXPECT_EQ(*back.lhs, *r.lhs);
    EXPECT_EQ(back.rhs, r.rhs);
    EXPECT_EQ(back.holds, r.holds);
    EXPECT_EQ(back.relation, r.relation);
    EXPECT_EQ(back.params, r.params);
    EXPECT_TRUE(to_json(make_bound_report("n", 1.0, NAN, Relation::less, 0.0))["rhs"].is_null());
}

TEST(BoundReport, StableDump)
{
    Json j;
    j["zeta"] = 1;
    j["alpha"] = 0.1;
    EXPECT_EQ(dump_stable(j), "{\n  \"zeta\": 1,\n  \"alpha\": 0.1\n}");
}

TEST(ConstantsReport, Checks)
{
    EXPECT_TRUE(check_upper("u", 1.0, 1.0 + 1e-8).verdict);
    EXPECT_FALSE(check_upper("u", 1.0, 1.0).verdict);
    EXPECT_TRUE(check_lower("l", 2.0, 1.0).verdict);
    EXPECT_TRUE(check_close("c", 1.0, 1.05, 0.1).verdict);
    EXPECT_FALSE(check_close("c", 1.0, 1.2, 0.1).verdict);
    const Json j = to_json(check_upper("u", 1.0, 2.0));
    for (const char* key : {"name", "computed", "paper_bound", "slack", "verdict"})
        EXPECT_TRUE(j.contains(key)) << key;
}

TEST(CompensatedSum, BeatsNaiveSummation)
{
    CompensatedSum c;
    double naive = 0;
    c += 1.0;
    naive += 1.0;
    for (int i = 0; i < 1'000'000; ++i) {
        c += 1e-16;
        naive += 1e-16;
    }
    EXPECT_EQ(naive, 1.0);
    EXPECT_NEAR(c.value(), 1.0 + 1e-10, 1e-22);
}

TEST(CompensatedSum, MergeMatchesSequential)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(0, 1);
    CompensatedSum all, a, b;
    for (int i = 0; i < 10'000; ++i) {
        const double x = 1.0 / (1 + 1e6 * d(rng));
        all += x;
        (i < 5000 ? a : b) += x;
    }
    a.add(b);
    EXPECT_NEAR(a.value(), all.value(), 1e-15 * all.value());
}
