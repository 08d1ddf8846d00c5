#include "wbt/campaign.hpp"

#include "wbt/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <thread>

namespace wbt {

void SweepState::advance(const Segment& seg, std::uint64_t i)
{
    ++z;
    if (seg.mu[i] != 0) {
        const double phi = static_cast<double>(seg.phi[i]);
        S1 += 1.0 / phi;
        H1 += static_cast<double>(seg.sigma[i]) / phi;
    }
    if (seg.is_prime_at(i))
        ++piz;
}

namespace {

struct Terms {
    double lhs;
    double rhs;
};

Terms inequality_terms(double Y, double S1, double H1, std::uint64_t piz)
{
    const double ratio = H1 / S1;
    return {Y / S1 + ratio * ratio + static_cast<double>(piz), 2.0 * Y / std::log(Y)};
}

} // namespace

BoundReport test_inequality(double Y, double S1, double H1, std::uint64_t piz, double slack_rel)
{
    detail::require<PreconditionError>(Y > 1.0, "test_inequality: Y must exceed 1");
    detail::require<PreconditionError>(S1 > 0.0, "test_inequality: S1 must be positive");
    const Terms t = inequality_terms(Y, S1, H1, piz);
    Json params;
    params["Y"] = Y;
    params["S1"] = S1;
    params["H1"] = H1;
    params["piz"] = piz;
    return make_bound_report("Y/S1 + (H1/S1)^2 + pi(z) < 2Y/log Y", t.lhs, t.rhs, Relation::less, slack_rel * t.rhs,
                             std::move(params));
}

ConstantsReport concavity_check()
{
    auto f = [](double t) { return t / std::log(t); };
    const double e2 = std::exp(2.0);
    double worst = HUGE_VAL;
    constexpr int kPoints = 60;
    constexpr int kMix = 16;
    for (int a = 0; a < kPoints; ++a) {
        const double t0 = e2 * (1.0 + 1e-6) * std::pow(1e19 / e2, static_cast<double>(a) / kPoints);
        for (int b = a + 1; b <= kPoints; ++b) {
            const double t1 = e2 * (1.0 + 1e-6) * std::pow(1e19 / e2, static_cast<double>(b) / kPoints);
            for (int m = 1; m < kMix; ++m) {
                const double lam = static_cast<double>(m) / kMix;
                const double gap = f(lam * t0 + (1.0 - lam) * t1) - (lam * f(t0) + (1.0 - lam) * f(t1));
                worst = std::min(worst, gap / f(t1));
            }
        }
    }
    // gap >= 0 up to rounding
    return check_lower("min concavity gap of t/log t above e^2 (relative)", worst, -1e-12, 0.0);
}

CampaignConfig CampaignConfig::quick()
{
    return {};
}

CampaignConfig CampaignConfig::full()
{
    CampaignConfig c;
    c.z_max = kFullZMax;
    c.mode = CampaignMode::full;
    return c;
}

std::uint64_t campaign_block_length(std::uint64_t stride)
{
    constexpr std::uint64_t kMaxBlock = 1'000'000;
    detail::require<PreconditionError>(stride >= 1, "checkpoint stride must be >= 1");
    if (stride <= kMaxBlock)
        return stride;
    detail::require<PreconditionError>(stride % kMaxBlock == 0,
                                       "checkpoint stride above 1e6 must be a multiple of 1e6");
    return kMaxBlock;
}

void CampaignTally::record(const CheckWitness& w, bool holds, bool inconclusive_flag)
{
    ++checks;
    if (!min_margin || w.margin < min_margin->margin)
        min_margin = w;
    if (!min_relative_margin || w.margin / w.rhs < min_relative_margin->margin / min_relative_margin->rhs)
        min_relative_margin = w;
    if (holds)
        return;
    if (inconclusive_flag) {
        ++inconclusive_count;
        if (inconclusive.size() < kMaxListed)
            inconclusive.push_back(w);
    } else {
        ++failure_count;
        if (failures.size() < kMaxListed)
            failures.push_back(w);
    }
}

void CampaignTally::merge(const CampaignTally& later)
{
    checks += later.checks;
    failure_count += later.failure_count;
    inconclusive_count += later.inconclusive_count;
    if (later.min_margin && (!min_margin || later.min_margin->margin < min_margin->margin))
        min_margin = later.min_margin;
    if (later.min_relative_margin &&
        (!min_relative_margin || later.min_relative_margin->margin / later.min_relative_margin->rhs <
                                     min_relative_margin->margin / min_relative_margin->rhs))
        min_relative_margin = later.min_relative_margin;
    for (const auto& w : later.failures)
        if (failures.size() < kMaxListed)
            failures.push_back(w);
    for (const auto& w : later.inconclusive)
        if (inconclusive.size() < kMaxListed)
            inconclusive.push_back(w);
    max_drift = std::max(max_drift, later.max_drift);
}

namespace {

Json witness_json(const std::optional<CheckWitness>& w)
{
    if (!w)
        return nullptr;
    Json j;
    j["z"] = w->z;
    j["Y"] = w->Y;
    j["margin"] = w->margin;
    j["rhs"] = w->rhs;
    return j;
}

std::optional<CheckWitness> witness_from_json(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return CheckWitness{j.at("z").get<std::uint64_t>(), j.at("Y").get<double>(), j.at("margin").get<double>(),
                        j.at("rhs").get<double>()};
}

Json tally_json(const CampaignTally& t)
{
    Json j;
    j["checks"] = t.checks;
    j["failure_count"] = t.failure_count;
    j["inconclusive_count"] = t.inconclusive_count;
    j["min_margin"] = witness_json(t.min_margin);
    j["min_relative_margin"] = witness_json(t.min_relative_margin);
    Json f = Json::array(), inc = Json::array();
    for (const auto& w : t.failures)
        f.push_back(witness_json(w));
    for (const auto& w : t.inconclusive)
        inc.push_back(witness_json(w));
    j["failures"] = f;
    j["inconclusive"] = inc;
    j["max_drift"] = t.max_drift;
    return j;
}

CampaignTally tally_from_json(const Json& j)
{
    CampaignTally t;
    t.checks = j.at("checks").get<std::uint64_t>();
    t.failure_count = j.at("failure_count").get<std::uint64_t>();
    t.inconclusive_count = j.at("inconclusive_count").get<std::uint64_t>();
    t.min_margin = witness_from_json(j.at("min_margin"));
    t.min_relative_margin = witness_from_json(j.at("min_relative_margin"));
    for (const auto& w : j.at("failures"))
        t.failures.push_back(*witness_from_json(w));
    for (const auto& w : j.at("inconclusive"))
        t.inconclusive.push_back(*witness_from_json(w));
    t.max_drift = j.at("max_drift").get<double>();
    return t;
}

Checkpoint checkpoint_of(const SweepState& s)
{
    return {s.z, s.S1.sum(), s.S1.compensation(), s.H1.sum(), s.H1.compensation(), s.piz};
}

Checkpoint checkpoint_from_json(const Json& j)
{
    return {j.at("z").get<std::uint64_t>(),       j.at("S1").get<double>(),
            j.at("S1_compensation").get<double>(), j.at("H1").get<double>(),
            j.at("H1_compensation").get<double>(), j.at("piz").get<std::uint64_t>()};
}

SweepState state_of(const Checkpoint& c)
{
    SweepState s;
    s.z = c.z;
    s.S1 = CompensatedSum(c.S1, c.S1_compensation);
    s.H1 = CompensatedSum(c.H1, c.H1_compensation);
    s.piz = c.piz;
    return s;
}

struct BlockSums {
    CompensatedSum S1;
    CompensatedSum H1;
    std::uint64_t pi = 0;
};

// Runs fn(block) for every block in [first, last) on up to `threads` workers.
void parallel_blocks(std::uint64_t first, std::uint64_t last, unsigned threads, std::uint64_t z_hi,
                     const std::function<void(std::uint64_t, SegmentTabulator&, Segment&)>& fn)
{
    std::atomic<std::uint64_t> next{first};
    auto worker = [&] {
        SegmentTabulator tab(z_hi);
        Segment seg;
        for (std::uint64_t b; (b = next.fetch_add(1)) < last;)
            fn(b, tab, seg);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(last - first)));
    if (n == 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        pool.emplace_back(worker);
}

double relative_gap(double a, double b)
{
    return b == 0.0 ? std::fabs(a) : std::fabs(a - b) / std::fabs(b);
}

} // namespace

Json to_json(const Checkpoint& c)
{
    Json j;
    j["z"] = c.z;
    j["S1"] = c.S1;
    j["S1_compensation"] = c.S1_compensation;
    j["H1"] = c.H1;
    j["H1_compensation"] = c.H1_compensation;
    j["piz"] = c.piz;
    return j;
}

CampaignReport run_campaign(const CampaignConfig& cfg)
{
    detail::require<PreconditionError>(cfg.z_min >= 50 && cfg.z_min < cfg.z_max,
                                       "campaign: need 50 <= z_min < z_max");
    detail::require<PreconditionError>(cfg.threads >= 1, "campaign: threads must be >= 1");
    const std::uint64_t L = campaign_block_length(cfg.checkpoint_stride);
    const std::uint64_t z_last = cfg.z_max - 1;

    CampaignReport report;
    report.z_min = cfg.z_min;
    report.z_max = cfg.z_max;
    report.block_length = L;
    report.checkpoint_stride = cfg.checkpoint_stride;
    report.concavity = concavity_check();

    SweepState state;
    CampaignTally tally;
    std::vector<std::string> resumed_lines;

    if (!cfg.resume_path.empty()) {
        std::ifstream in(cfg.resume_path);
        detail::require<ResourceError>(static_cast<bool>(in), "campaign: cannot open resume file " + cfg.resume_path);
        std::string line;
        Json last;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            last = Json::parse(line);
            resumed_lines.push_back(line);
            detail::require<PreconditionError>(last.at("z_min").get<std::uint64_t>() == cfg.z_min &&
                                                   last.at("block_length").get<std::uint64_t>() == L &&
                                                   last.at("checkpoint_stride").get<std::uint64_t>() ==
                                                       cfg.checkpoint_stride,
                                               "campaign: resume file was written with a different configuration");
            report.checkpoints.push_back(checkpoint_from_json(last));
        }
        detail::require<PreconditionError>(!last.is_null(), "campaign: resume file holds no checkpoint");
        state = state_of(report.checkpoints.back());
        tally = tally_from_json(last.at("tally"));
        detail::require<PreconditionError>(state.z % L == 0 || state.z == z_last,
                                           "campaign: resume point is not a block boundary");
        detail::require<PreconditionError>(state.z <= z_last, "campaign: resume point beyond z_max");
    }

    std::ofstream ckpt;
    if (!cfg.checkpoint_path.empty()) {
        const bool append = !cfg.resume_path.empty() && cfg.resume_path == cfg.checkpoint_path;
        ckpt.open(cfg.checkpoint_path, append ? std::ios::app : std::ios::trunc);
        detail::require<ResourceError>(static_cast<bool>(ckpt),
                                       "campaign: cannot open checkpoint file " + cfg.checkpoint_path);
        if (!append)
            for (const auto& l : resumed_lines)
                ckpt << l << '\n';
    }

    const std::uint64_t n_blocks = (z_last + L - 1) / L; // block b covers [bL+1, min((b+1)L, z_last)]
    const std::uint64_t blocks_per_wave =
        std::max<std::uint64_t>(cfg.checkpoint_stride / L, 4ULL * cfg.threads);
    std::uint64_t block = state.z / L;
    bool stopped = false;

    while (block < n_blocks && !stopped) {
        const std::uint64_t wave_end = std::min(n_blocks, block + blocks_per_wave);
        const std::uint64_t count = wave_end - block;
        auto block_base = [&](std::uint64_t b) { return b * L + 1; };
        auto block_len = [&](std::uint64_t b) { return std::min(L, z_last - b * L); };

        std::vector<BlockSums> sums(count);
        parallel_blocks(block, wave_end, cfg.threads, z_last, [&](std::uint64_t b, SegmentTabulator& tab, Segment& seg) {
            tab.fill(block_base(b), block_len(b), seg);
            BlockSums& out = sums[b - block];
            for (std::uint64_t i = 0; i < seg.length; ++i) {
                if (seg.mu[i] != 0) {
                    const double phi = static_cast<double>(seg.phi[i]);
                    out.S1 += 1.0 / phi;
                    out.H1 += static_cast<double>(seg.sigma[i]) / phi;
                }
                out.pi += seg.is_prime_at(i);
            }
        });

        std::vector<SweepState> starts(count + 1);
        starts[0] = state;
        for (std::uint64_t i = 0; i < count; ++i) {
            SweepState next = starts[i];
            next.z += block_len(block + i);
            next.S1.add(sums[i].S1);
            next.H1.add(sums[i].H1);
            next.piz += sums[i].pi;
            starts[i + 1] = next;
        }

        std::vector<CampaignTally> tallies(count);
        parallel_blocks(block, wave_end, cfg.threads, z_last, [&](std::uint64_t b, SegmentTabulator& tab, Segment& seg) {
            tab.fill(block_base(b), block_len(b), seg);
            SweepState s = starts[b - block];
            CampaignTally& t = tallies[b - block];
            for (std::uint64_t i = 0; i < seg.length; ++i) {
                s.advance(seg, i);
                if (s.z < cfg.z_min)
                    continue;
                const double s1 = s.S1.value();
                const double h1 = s.H1.value();
                const double zf = static_cast<double>(s.z);
                for (const double Y : {4.0 * zf * zf, 4.0 * (zf + 1.0) * (zf + 1.0)}) {
                    const Terms terms = inequality_terms(Y, s1, h1, s.piz);
                    const double margin = terms.rhs - terms.lhs;
                    const bool holds = margin > kCampaignSlack * terms.rhs;
                    t.record({s.z, Y, margin, terms.rhs}, holds, !holds && margin > 0.0);
                }
            }
            const SweepState& expect = starts[b - block + 1];
            t.max_drift = std::max(relative_gap(s.S1.value(), expect.S1.value()),
                                   relative_gap(s.H1.value(), expect.H1.value()));
            if (s.piz != expect.piz)
                t.max_drift = HUGE_VAL;
        });

        for (std::uint64_t i = 0; i < count; ++i) {
            tally.merge(tallies[i]);
            state = starts[i + 1];
            const bool boundary = state.z % cfg.checkpoint_stride == 0 || state.z == z_last;
            if (!boundary)
                continue;
            const Checkpoint c = checkpoint_of(state);
            report.checkpoints.push_back(c);
            if (ckpt.is_open()) {
                Json j = to_json(c);
                j["z_min"] = cfg.z_min;
                j["block_length"] = L;
                j["checkpoint_stride"] = cfg.checkpoint_stride;
                j["tally"] = tally_json(tally);
                ckpt << j.dump() << '\n';
                ckpt.flush();
                detail::require<ResourceError>(static_cast<bool>(ckpt), "campaign: checkpoint write failed");
            }
            if (cfg.stop_after && state.z >= *cfg.stop_after && state.z != z_last) {
                stopped = true;
                break;
            }
        }
        block = wave_end;
    }

    report.z_reached = state.z;
    report.complete = state.z == z_last;
    report.tally = std::move(tally);
    report.verdict = report.complete && report.tally.checks > 0 && report.tally.failure_count == 0 &&
                     report.tally.inconclusive_count == 0 && report.tally.max_drift <= 1e-9 &&
                     report.concavity.verdict;

    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::trunc);
        detail::require<ResourceError>(static_cast<bool>(out), "campaign: cannot open " + cfg.output_path);
        out << dump_stable(to_json(report)) << '\n';
        detail::require<ResourceError>(static_cast<bool>(out), "campaign: report write failed");
    }
    return report;
}

Json to_json(const CampaignReport& r)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "verify-test";
    j["z_min"] = r.z_min;
    j["z_max"] = r.z_max;
    j["z_reached"] = r.z_reached;
    j["block_length"] = r.block_length;
    j["checkpoint_stride"] = r.checkpoint_stride;
    j["complete"] = r.complete;
    j["tally"] = tally_json(r.tally);
    Json cps = Json::array();
    for (const auto& c : r.checkpoints)
        cps.push_back(to_json(c));
    j["checkpoints"] = cps;
    j["concavity"] = to_json(r.concavity);
    j["verdict"] = r.verdict;
    return j;
}

} // namespace wbt
