# SPDX-License-Identifier: Apache-2.0
"""RIS coverage simulator: scene synthesis, link budgets, greedy placement."""

from ._core import (
    SceneMap,
    candidate_count,
    coverage_fraction,
    db_to_linear,
    fresnel_ratio,
    fspl_db,
    generate_manhattan,
    linear_to_db,
    load_scene,
    noise_floor_dbm,
    percentile_snr,
    ris_path_gain_db,
    run_placement,
    shannon_rate,
    ue_grid_size,
)

__all__ = [
    "SceneMap",
    "candidate_count",
    "coverage_fraction",
    "db_to_linear",
    "fresnel_ratio",
    "fspl_db",
    "generate_manhattan",
    "linear_to_db",
    "load_scene",
    "noise_floor_dbm",
    "percentile_snr",
    "ris_path_gain_db",
    "run_placement",
    "shannon_rate",
    "ue_grid_size",
]

__version__ = "0.1.0"
