"""Beatty sequences over exact quadratic-irrational arithmetic."""

from beatty._core import (
    BeattyError,
    BeattySeq,
    DisjointnessFinding,
    ExactReal,
    MixedRadicandsError,
    MultiConfig,
    Occupancy,
    PartitionVerdict,
    Rational,
    RecordEvent,
    StadiumConfig,
    WindowReport,
    complementary,
    crt_coprime,
    disjoint_window,
    domain_occupancy,
    edge_point,
    equal_rational,
    fraenkel_condition,
    gamma_disjoint_exists,
    gamma_witness,
    jrt_coprime,
    lattice_condition,
    lemma_positions,
    offsets_all_intersect,
    parse_real,
    position_x,
    position_y,
    rational_disjoint_oracle,
    rational_disjoint_witness,
    relocate_common_start,
    simulate_multi,
    simulate_two,
    skolem_classify,
    skolem_condition,
    skolem_necessary,
    verify_eventual,
    verify_partition,
    window_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
