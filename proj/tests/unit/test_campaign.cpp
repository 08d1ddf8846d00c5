#include "oracles.hpp"

#include <wbt/campaign.hpp>
#include <wbt/errors.hpp>
#include <wbt/prime_sums.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace wbt;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "wbt_campaign_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CampaignConfig small(std::uint64_t z_max, std::uint64_t stride)
{
    CampaignConfig c;
    c.z_min = 50;
    c.z_max = z_max;
    c.checkpoint_stride = stride;
    return c;
}

} // namespace

TEST(TestInequality, EqualityCaseIsNotAPass)
{
    const double e2 = std::exp(2.0);
    const auto r = test_inequality(e2, 1.0, 0.0, 0);
    EXPECT_NEAR(*r.lhs, e2, 1e-15 * e2);
    EXPECT_NEAR(r.rhs, e2, 1e-15 * e2);
    EXPECT_NEAR(r.margin, 0.0, 1e-12);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.relation, Relation::less);
}

TEST(TestInequality, AtFifty)
{
    const double s = static_cast<double>(oracle::S(1, 50));
    const double h = static_cast<double>(oracle::H(1, 50));
    const auto piz = oracle::pi(50);
    EXPECT_EQ(piz, 15u);
    const auto r = test_inequality(1e4, s, h, piz);
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(*r.lhs, 1e4 / s + (h / s) * (h / s) + 15, 1e-9);
    EXPECT_NEAR(r.rhs, 2e4 / std::log(1e4), 1e-9);
}

TEST(TestInequality, AtHundredThousand)
{
    const double s = static_cast<double>(oracle::S(1, 100'000));
    const double h = static_cast<double>(oracle::H(1, 100'000));
    EXPECT_TRUE(test_inequality(4e10, s, h, pi_count(100'000)).holds);
}

TEST(TestInequality, Preconditions)
{
    EXPECT_THROW((void)test_inequality(1.0, 1.0, 1.0, 0), PreconditionError);
    EXPECT_THROW((void)test_inequality(10.0, 0.0, 1.0, 0), PreconditionError);
}

TEST(Concavity, GridCheck)
{
    const auto c = concavity_check();
    EXPECT_TRUE(c.verdict);
    EXPECT_GE(c.computed, 0.0);
}

TEST(Campaign, Configs)
{
    EXPECT_EQ(CampaignConfig::quick().z_max, 2'000'000u);
    EXPECT_EQ(CampaignConfig::full().z_max, 2'000'000'000u);
    EXPECT_EQ(CampaignConfig::full().mode, CampaignMode::full);
    EXPECT_THROW((void)run_campaign(small(50, 10)), PreconditionError);
    auto low = small(100, 10);
    low.z_min = 49;
    EXPECT_THROW((void)run_campaign(low), PreconditionError);
    EXPECT_THROW((void)run_campaign(small(100, 1'500'000)), PreconditionError);
    EXPECT_EQ(campaign_block_length(10'000'000), 1'000'000u);
    EXPECT_EQ(campaign_block_length(5'000), 5'000u);
}

TEST(Campaign, SingleZ)
{
    const auto r = run_campaign(small(51, 1000));
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.tally.checks, 2u);
    EXPECT_TRUE(r.complete);
    ASSERT_EQ(r.checkpoints.size(), 1u);
    EXPECT_EQ(r.checkpoints[0].z, 50u);
    EXPECT_EQ(r.checkpoints[0].piz, 15u);
}

TEST(Campaign, IncrementalMatchesFresh)
{
    const auto r = run_campaign(small(300'001, 40'000));
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.tally.checks, 2 * (300'000u - 49u));
    EXPECT_GT(r.tally.min_margin->margin, 0.0);
    ASSERT_EQ(r.checkpoints.size(), 8u);
    // one trial-division pass, read off at each checkpoint
    long double S = 0, H = 0;
    std::uint64_t n = 0;
    for (const auto& c : r.checkpoints) {
        for (; n < c.z;) {
            const auto a = oracle::arith(++n);
            if (a.mu != 0) {
                S += 1.0L / a.phi;
                H += static_cast<long double>(a.sigma) / a.phi;
            }
        }
        EXPECT_LE(std::abs(c.S1 + c.S1_compensation - S), 1e-9 * S) << c.z;
        EXPECT_LE(std::abs(c.H1 + c.H1_compensation - H), 1e-9 * H) << c.z;
        EXPECT_EQ(c.piz, pi_count(c.z)) << c.z;
    }
    EXPECT_LE(r.tally.max_drift, 1e-9);
}

TEST(Campaign, DeterministicAcrossThreads)
{
    std::string first;
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
        auto cfg = small(400'000, 25'000);
        cfg.threads = threads;
        const std::string text = dump_stable(to_json(run_campaign(cfg)));
        if (first.empty())
            first = text;
        EXPECT_EQ(text, first) << threads;
    }
}

TEST(Campaign, ReportFileIsStable)
{
    const auto a = scratch("a.json"), b = scratch("b.json");
    auto cfg = small(120'000, 30'000);
    cfg.output_path = a.string();
    const auto r = run_campaign(cfg);
    cfg.output_path = b.string();
    cfg.threads = 4;
    (void)run_campaign(cfg);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(a), dump_stable(to_json(r)) + "\n");
    const Json j = Json::parse(slurp(a));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_TRUE(j["verdict"].get<bool>());
}

TEST(Campaign, ResumeEqualsUninterrupted)
{
    const auto full_out = scratch("full.json");
    auto cfg = small(250'000, 20'000);
    cfg.output_path = full_out.string();
    const auto whole = run_campaign(cfg);
    ASSERT_TRUE(whole.verdict);

    const auto ck = scratch("ck.jsonl");
    auto part = small(250'000, 20'000);
    part.checkpoint_path = ck.string();
    part.stop_after = 100'000;
    const auto half = run_campaign(part);
    EXPECT_FALSE(half.complete);
    EXPECT_FALSE(half.verdict);
    EXPECT_EQ(half.z_reached, 100'000u);

    // every checkpoint line carries the documented fields
    std::ifstream in(ck);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        const Json j = Json::parse(line);
        for (const char* key : {"z", "S1", "S1_compensation", "H1", "H1_compensation", "piz"})
            EXPECT_TRUE(j.contains(key)) << key;
        ++lines;
    }
    EXPECT_EQ(lines, 5);

    // resume into a fresh file
    const auto ck2 = scratch("ck2.jsonl");
    const auto resumed_out = scratch("resumed.json");
    auto rest = small(250'000, 20'000);
    rest.resume_path = ck.string();
    rest.checkpoint_path = ck2.string();
    rest.output_path = resumed_out.string();
    rest.threads = 3;
    const auto resumed = run_campaign(rest);
    EXPECT_TRUE(resumed.verdict);
    EXPECT_EQ(slurp(resumed_out), slurp(full_out));

    // resume appending to the same file
    auto again = small(250'000, 20'000);
    again.resume_path = ck.string();
    again.checkpoint_path = ck.string();
    const auto appended = run_campaign(again);
    EXPECT_EQ(dump_stable(to_json(appended)), dump_stable(to_json(whole)));
    EXPECT_EQ(slurp(ck), slurp(ck2));
}

TEST(Campaign, ResumeRejectsMismatch)
{
    const auto ck = scratch("mm.jsonl");
    auto part = small(100'000, 10'000);
    part.checkpoint_path = ck.string();
    part.stop_after = 20'000;
    (void)run_campaign(part);
    auto other = small(100'000, 20'000);
    other.resume_path = ck.string();
    EXPECT_THROW((void)run_campaign(other), PreconditionError);
    auto missing = small(100'000, 10'000);
    missing.resume_path = scratch("nope.jsonl").string();
    EXPECT_THROW((void)run_campaign(missing), ResourceError);
}
