"""Segment-constrained subsequence matching and segmental LCS."""

from ._core import (
    SizeLimitError,
    build_episode_reduction,
    check_reduction_equivalence,
    compute_llpf,
    compute_lpf,
    compute_lsf,
    indseglcs,
    min_segments,
    oracle,
    seg2_linear,
    sege,
    slcs,
    slcs_witness,
    slcs_with_stats,
)

__all__ = [
    "SizeLimitError",
    "build_episode_reduction",
    "check_reduction_equivalence",
    "compute_llpf",
    "compute_lpf",
    "compute_lsf",
    "indseglcs",
    "min_segments",
    "oracle",
    "seg2_linear",
    "sege",
    "slcs",
    "slcs_witness",
    "slcs_with_stats",
]
