// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "riscov/propagation.hpp"
#include "riscov/scene.hpp"

namespace riscov {

// Fraction of SNR samples at or above the threshold. Throws on empty input.
double coverage_fraction(const std::vector<double>& snr_db, double threshold_db);

// Width-independent candidate->UE link table (compressed sparse rows).
// geom = incidence_cos / (4*pi*d1*d2) with distances clamped to >= 1 m, so a
// width-w RIS delivers rx_mw = eirp_mw * (w^2 * geom)^2 * refl_linear.
// Pairs appear only when the candidate's feeding hop and the candidate->UE
// hop are both LOS-clear and the UE sits in the front half-space.
struct CandidateLinks {
    std::vector<std::size_t> offsets;  // size candidates+1
    std::vector<std::uint32_t> ue;
    std::vector<double> geom;
};

using LinksPtr = std::shared_ptr<const CandidateLinks>;

LinksPtr build_candidate_links(const SceneMap& scene, const std::vector<UESample>& ues,
                               const std::vector<CandidateSite>& candidates, int workers);

struct TraceEntry {
    int iteration = 0;        // 1-based placement index
    int candidate_index = -1;
    int newly_covered = 0;
    double margin_gain = 0.0;
    double coverage = 0.0;    // fraction after this placement
};

struct PlacementState {
    const SceneMap* scene = nullptr;
    const std::vector<UESample>* ues = nullptr;
    const std::vector<CandidateSite>* candidates = nullptr;
    LinksPtr links;

    double noise_dbm = 0.0;
    double eirp_mw = 0.0;       // tx power + both array gains, linear
    double refl_linear = 1.0;   // 10^(-reflection_loss/10)

    std::vector<RISUnit> placed;
    std::vector<int> placed_indices;
    std::vector<char> used;       // per candidate
    std::vector<double> power_mw; // running per-UE total (direct + placed RIS)
    std::vector<double> snr_db;
    std::vector<double> baseline_snr_db;
    std::vector<TraceEntry> trace;
};

// Baseline state: best-single-BS direct power per UE, nothing placed.
// The scene, UE list and candidate list must outlive the state.
PlacementState init_placement_state(const SceneMap& scene, const std::vector<UESample>& ues,
                                    const std::vector<CandidateSite>& candidates,
                                    LinksPtr links, int workers);

struct ScoreResult {
    int newly_covered = 0;
    double margin_gain = 0.0;  // sum of min(thr, snr) improvements, dB
};

// Pure: effect of adding a width_m RIS at candidate_index to the current
// state, against the band's SNR threshold. Throws if already placed.
ScoreResult score_candidate(const PlacementState& state, int candidate_index, double width_m);

// Total order over candidate scores: more newly covered UEs, then larger
// margin gain, then lower index.
bool score_better(const ScoreResult& a, int index_a, const ScoreResult& b, int index_b);

enum class StopReason { TargetMet, MaxRisReached, NoImprovement, CandidatesExhausted };

std::string to_string(StopReason reason);

struct GreedyOptions {
    double width_m = 1.0;
    int max_ris = 1 << 30;
    int workers = 1;
};

struct DeploymentResult {
    PlacementState state;
    StopReason stop_reason = StopReason::TargetMet;
    int ris_count = 0;
    double baseline_coverage = 0.0;
    double final_coverage = 0.0;
    double per_bs_average = 0.0;  // ris_count / number of BSs
};

// Iterative greedy exhaustive search: each round scores every remaining
// candidate, places the winner, and updates the cached per-UE powers
// incrementally. Threshold and coverage target come from scene.band.
// `prebuilt` lets callers share one link table across widths.
DeploymentResult run_greedy(const SceneMap& scene, const std::vector<UESample>& ues,
                            const std::vector<CandidateSite>& candidates,
                            const GreedyOptions& options, LinksPtr prebuilt = nullptr);

// Independent greedy run per width in scene.band.ris_widths_m, sharing one
// link table.
std::vector<DeploymentResult> sweep_sizes(const SceneMap& scene,
                                          const std::vector<UESample>& ues,
                                          const std::vector<CandidateSite>& candidates,
                                          int max_ris, int workers);

}  // namespace riscov
