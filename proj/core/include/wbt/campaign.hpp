#pragma once

#include "wbt/arith_tab.hpp"
#include "wbt/compensated.hpp"
#include "wbt/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wbt {

/// Running S_1(z), H_1(z) and pi(z) for the sieve-level sweep.
struct SweepState {
    std::uint64_t z = 0;
    CompensatedSum S1;
    CompensatedSum H1;
    std::uint64_t piz = 0;

    /// Folds in entry i of seg, which must be the integer z + 1.
    void advance(const Segment& seg, std::uint64_t i);

    bool operator==(const SweepState&) const = default;
};

/// Relative margin a strict check must clear to count as passed.
inline constexpr double kCampaignSlack = 1e-6;

/// Y / S1 + (H1 / S1)^2 + piz < 2 Y / log Y, passing only with margin > slack_rel * rhs.
[[nodiscard]] BoundReport test_inequality(double Y, double S1, double H1, std::uint64_t piz,
                                          double slack_rel = kCampaignSlack);

/// Samples t -> t / log t on a grid of pairs t0 < t1 above e^2 and reports the
/// smallest gap f(mix) - mix(f) normalised by f(t1) (must be >= 0).
[[nodiscard]] ConstantsReport concavity_check();

enum class CampaignMode { quick, full };

inline constexpr std::uint64_t kQuickZMax = 2'000'000;
inline constexpr std::uint64_t kFullZMax = 2'000'000'000;

struct CampaignConfig {
    std::uint64_t z_min = 50;
    std::uint64_t z_max = kQuickZMax; ///< exclusive
    std::uint64_t checkpoint_stride = 10'000'000;
    std::string output_path;     ///< final report JSON; empty = not written
    std::string checkpoint_path; ///< JSON-lines checkpoints; empty = not written
    std::string resume_path;     ///< checkpoint file to resume from; empty = fresh run
    CampaignMode mode = CampaignMode::quick;
    unsigned threads = 1;
    /// Stop at the first checkpoint at or beyond this z (simulates an interruption).
    std::optional<std::uint64_t> stop_after;

    [[nodiscard]] static CampaignConfig quick();
    [[nodiscard]] static CampaignConfig full();
};

/// Tabulation block size used for a checkpoint stride: the stride itself up
/// to 1e6, otherwise 1e6 (stride must then be a multiple of 1e6).
[[nodiscard]] std::uint64_t campaign_block_length(std::uint64_t checkpoint_stride);

struct Checkpoint {
    std::uint64_t z = 0;
    double S1 = 0.0;
    double S1_compensation = 0.0;
    double H1 = 0.0;
    double H1_compensation = 0.0;
    std::uint64_t piz = 0;

    bool operator==(const Checkpoint&) const = default;
};

struct CheckWitness {
    std::uint64_t z = 0;
    double Y = 0.0;
    double margin = 0.0;
    double rhs = 0.0;

    bool operator==(const CheckWitness&) const = default;
};

/// Running aggregate over all checks made so far.
struct CampaignTally {
    std::uint64_t checks = 0;
    std::uint64_t failure_count = 0;
    std::uint64_t inconclusive_count = 0;
    std::optional<CheckWitness> min_margin;
    std::optional<CheckWitness> min_relative_margin;
    std::vector<CheckWitness> failures;     ///< first kMaxListed
    std::vector<CheckWitness> inconclusive; ///< first kMaxListed
    double max_drift = 0.0; ///< relative gap between incremental and block-prefix sums at block ends

    static constexpr std::size_t kMaxListed = 100;

    void record(const CheckWitness& w, bool holds, bool inconclusive_flag);
    void merge(const CampaignTally& later);

    bool operator==(const CampaignTally&) const = default;
};

struct CampaignReport {
    std::uint64_t z_min = 0;
    std::uint64_t z_max = 0;
    std::uint64_t z_reached = 0; ///< last z processed
    std::uint64_t block_length = 0;
    std::uint64_t checkpoint_stride = 0;
    bool complete = false;
    CampaignTally tally;
    std::vector<Checkpoint> checkpoints;
    ConstantsReport concavity;
    bool verdict = false;
};

/// Sweeps z over [z_min, z_max), checking the sieve inequality at Y = 4 z^2 and 4 (z+1)^2.
///
/// z is split into fixed blocks. A first pass tabulates each block and sums its
/// terms from zero; a sequential prefix combine gives the exact state at each
/// block start; a second pass re-tabulates each block from that state and runs
/// the checks. Block boundaries depend only on the stride, so the output is the
/// same for any thread count.
[[nodiscard]] CampaignReport run_campaign(const CampaignConfig& cfg);

[[nodiscard]] Json to_json(const CampaignReport& r);
[[nodiscard]] Json to_json(const Checkpoint& c);

} // namespace wbt
