// SPDX-License-Identifier: Apache-2.0
#include "riscov/deployment.hpp"

#include <algorithm>
#include <cmath>

#include "riscov/parallel.hpp"

namespace riscov {

namespace {

constexpr double kProbeOffset = 1e-3;      // must match ris_link_dbm
constexpr double kMarginFloorDb = -400.0;  // stands in for -inf in margin sums

double clamped(double snr_db) { return std::max(snr_db, kMarginFloorDb); }

double pair_power_mw(const PlacementState& state, double area_m2, double geom) {
    const double amplitude = area_m2 * geom;
    return state.eirp_mw * amplitude * amplitude * state.refl_linear;
}

}  // namespace

double coverage_fraction(const std::vector<double>& snr_db, double threshold_db) {
    if (snr_db.empty())
        throw ValidationError("coverage_fraction: empty SNR map");
    std::size_t covered = 0;
    for (double v : snr_db)
        if (v >= threshold_db) ++covered;
    return static_cast<double>(covered) / static_cast<double>(snr_db.size());
}

LinksPtr build_candidate_links(const SceneMap& scene, const std::vector<UESample>& ues,
                               const std::vector<CandidateSite>& candidates, int workers) {
    const std::size_t nc = candidates.size();
    std::vector<std::vector<std::uint32_t>> row_ue(nc);
    std::vector<std::vector<double>> row_geom(nc);

    parallel_for(nc, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
            const CandidateSite& site = candidates[c];
            const Point3 bs =
                scene.bs_sites[static_cast<std::size_t>(site.feeding_bs)].position;
            const double incidence_cos = dot(normalized(bs - site.position), site.normal);
            if (incidence_cos <= 0.0) continue;
            const Point3 probe = site.position + site.normal * kProbeOffset;
            if (!los_trace(scene, probe, bs).clear) continue;
            const double d1 = std::max(distance(bs, site.position), 1.0);
            for (std::size_t u = 0; u < ues.size(); ++u) {
                const Point3 up = ues[u].position;
                if (dot(up - site.position, site.normal) <= 0.0) continue;
                if (!los_trace(scene, probe, up).clear) continue;
                const double d2 = std::max(distance(site.position, up), 1.0);
                row_ue[c].push_back(static_cast<std::uint32_t>(u));
                row_geom[c].push_back(incidence_cos / (4.0 * kPi * d1 * d2));
            }
        }
    });

    auto links = std::make_shared<CandidateLinks>();
    links->offsets.resize(nc + 1, 0);
    std::size_t total = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        links->offsets[c] = total;
        total += row_ue[c].size();
    }
    links->offsets[nc] = total;
    links->ue.reserve(total);
    links->geom.reserve(total);
    for (std::size_t c = 0; c < nc; ++c) {
        links->ue.insert(links->ue.end(), row_ue[c].begin(), row_ue[c].end());
        links->geom.insert(links->geom.end(), row_geom[c].begin(), row_geom[c].end());
    }
    return links;
}

PlacementState init_placement_state(const SceneMap& scene, const std::vector<UESample>& ues,
                                    const std::vector<CandidateSite>& candidates,
                                    LinksPtr links, int workers) {
    PlacementState state;
    state.scene = &scene;
    state.ues = &ues;
    state.candidates = &candidates;
    state.links = std::move(links);
    state.noise_dbm = noise_floor_dbm(scene.band.bandwidth_hz, scene.band.ue_noise_figure_db);
    state.eirp_mw = db_to_linear(scene.band.bs_tx_power_dbm + scene.band.bs_array_gain_dbi +
                                 scene.band.ue_array_gain_dbi);
    state.refl_linear = db_to_linear(-scene.band.ris_reflection_loss_db);
    state.used.assign(candidates.size(), 0);
    state.power_mw.assign(ues.size(), 0.0);
    state.snr_db.assign(ues.size(), kUnreachableDb);

    parallel_for(ues.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t u = begin; u < end; ++u) {
            double best = kUnreachableDb;
            for (const BsSite& bs : scene.bs_sites) {
                const LinkBudget lb = direct_link_dbm(scene, bs, ues[u].position);
                best = std::max(best, lb.rx_power_dbm);
            }
            state.power_mw[u] = db_to_linear(best);
            state.snr_db[u] = snr_db_from_power(state.power_mw[u], state.noise_dbm);
        }
    });
    state.baseline_snr_db = state.snr_db;
    return state;
}

ScoreResult score_candidate(const PlacementState& state, int candidate_index, double width_m) {
    const std::size_t c = static_cast<std::size_t>(candidate_index);
    if (state.used[c])
        throw ValidationError("score_candidate: candidate already placed");
    const double threshold = state.scene->band.snr_threshold_db;
    const double area = width_m * width_m;
    ScoreResult score;
    for (std::size_t k = state.links->offsets[c]; k < state.links->offsets[c + 1]; ++k) {
        const std::uint32_t u = state.links->ue[k];
        const double p = pair_power_mw(state, area, state.links->geom[k]);
        const double before = state.snr_db[u];
        const double after = snr_db_from_power(state.power_mw[u] + p, state.noise_dbm);
        if (before < threshold && after >= threshold) ++score.newly_covered;
        score.margin_gain +=
            std::min(threshold, clamped(after)) - std::min(threshold, clamped(before));
    }
    return score;
}

bool score_better(const ScoreResult& a, int index_a, const ScoreResult& b, int index_b) {
    if (a.newly_covered != b.newly_covered) return a.newly_covered > b.newly_covered;
    if (a.margin_gain != b.margin_gain) return a.margin_gain > b.margin_gain;
    return index_a < index_b;
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::TargetMet: return "target_met";
        case StopReason::MaxRisReached: return "max_ris_reached";
        case StopReason::NoImprovement: return "no_improvement";
        case StopReason::CandidatesExhausted: return "candidates_exhausted";
    }
    return "unknown";
}

namespace {

void place_candidate(PlacementState& state, int candidate_index, double width_m,
                     int newly_covered, double margin_gain) {
    const std::size_t c = static_cast<std::size_t>(candidate_index);
    const double area = width_m * width_m;
    state.used[c] = 1;
    for (std::size_t k = state.links->offsets[c]; k < state.links->offsets[c + 1]; ++k) {
        const std::uint32_t u = state.links->ue[k];
        state.power_mw[u] += pair_power_mw(state, area, state.links->geom[k]);
        state.snr_db[u] = snr_db_from_power(state.power_mw[u], state.noise_dbm);
    }
    state.placed.emplace_back((*state.candidates)[c], width_m,
                              state.scene->band.ris_reflection_loss_db);
    state.placed_indices.push_back(candidate_index);
    TraceEntry entry;
    entry.iteration = static_cast<int>(state.placed.size());
    entry.candidate_index = candidate_index;
    entry.newly_covered = newly_covered;
    entry.margin_gain = margin_gain;
    entry.coverage = coverage_fraction(state.snr_db, state.scene->band.snr_threshold_db);
    state.trace.push_back(entry);
}

}  // namespace

DeploymentResult run_greedy(const SceneMap& scene, const std::vector<UESample>& ues,
                            const std::vector<CandidateSite>& candidates,
                            const GreedyOptions& options, LinksPtr prebuilt) {
    if (!prebuilt) prebuilt = build_candidate_links(scene, ues, candidates, options.workers);

    DeploymentResult result;
    result.state = init_placement_state(scene, ues, candidates, std::move(prebuilt),
                                        options.workers);
    PlacementState& state = result.state;
    const double threshold = scene.band.snr_threshold_db;
    const double target = scene.band.coverage_target_fraction;
    result.baseline_coverage = coverage_fraction(state.snr_db, threshold);

    double coverage = result.baseline_coverage;
    const std::size_t nc = candidates.size();
    std::vector<ScoreResult> scores(nc);
    for (;;) {
        if (coverage >= target) {
            result.stop_reason = StopReason::TargetMet;
            break;
        }
        if (static_cast<int>(state.placed.size()) >= options.max_ris) {
            result.stop_reason = StopReason::MaxRisReached;
            break;
        }
        if (state.placed.size() >= nc) {
            result.stop_reason = StopReason::CandidatesExhausted;
            break;
        }
        parallel_for(nc, options.workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t c = begin; c < end; ++c) {
                scores[c] = state.used[c] ? ScoreResult{-1, 0.0}
                                          : score_candidate(state, static_cast<int>(c),
                                                            options.width_m);
            }
        });
        int best = -1;
        for (std::size_t c = 0; c < nc; ++c) {
            if (state.used[c]) continue;
            if (best < 0 || score_better(scores[c], static_cast<int>(c), scores[best], best))
                best = static_cast<int>(c);
        }
        if (best < 0) {
            result.stop_reason = StopReason::CandidatesExhausted;
            break;
        }
        if (scores[best].newly_covered <= 0) {
            result.stop_reason = StopReason::NoImprovement;
            break;
        }
        place_candidate(state, best, options.width_m, scores[best].newly_covered,
                        scores[best].margin_gain);
        coverage = state.trace.back().coverage;
    }

    result.ris_count = static_cast<int>(state.placed.size());
    result.final_coverage = coverage;
    result.per_bs_average =
        static_cast<double>(result.ris_count) / static_cast<double>(scene.bs_sites.size());
    return result;
}

std::vector<DeploymentResult> sweep_sizes(const SceneMap& scene,
                                          const std::vector<UESample>& ues,
                                          const std::vector<CandidateSite>& candidates,
                                          int max_ris, int workers) {
    const LinksPtr links = build_candidate_links(scene, ues, candidates, workers);
    std::vector<DeploymentResult> results;
    results.reserve(scene.band.ris_widths_m.size());
    for (double width : scene.band.ris_widths_m) {
        GreedyOptions options;
        options.width_m = width;
        options.max_ris = max_ris;
        options.workers = workers;
        results.push_back(run_greedy(scene, ues, candidates, options, links));
    }
    return results;
}

}  // namespace riscov
