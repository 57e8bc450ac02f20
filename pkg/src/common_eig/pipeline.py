"""End-to-end detection of eigenvalues common to two matrices.

Two search modes share the same machinery.  The proposed mode scans only
the intersection of the two matrices' Gerschgorin inclusion intervals (any
real common eigenvalue must lie there); the conventional mode scans each
matrix's full interval.  Both then locate each matrix's real roots and pair
them up across matrices.  Characteristic-function evaluations are counted
per matrix and the wall time recorded, so the two modes can be compared on
actual work.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from .errors import InconsistentModesError
from .gerschgorin import RealInterval, intersect, matrix_bounds
from .matrix import DenseMatrix, char_fn
from .rootfind import (
    DEFAULT_DEDUPE_TOL,
    DEFAULT_STEP,
    DEFAULT_WIDTH_TOL,
    DEFAULT_ZERO_TOL,
    RootEstimate,
    find_real_roots,
)

__all__ = [
    "DEFAULT_MATCH_TOL",
    "Mode",
    "AnalysisConfig",
    "CommonEigenReport",
    "BenchmarkSummary",
    "common_eigenvalues",
    "match_roots",
    "run_benchmark",
]

DEFAULT_MATCH_TOL = 1e-6


class Mode(Enum):
    PROPOSED = "proposed"
    CONVENTIONAL = "conventional"
    BOTH = "both"


@dataclass(frozen=True)
class AnalysisConfig:
    """Knobs for one analysis run; defaults match the desk procedure."""

    mode: Mode = Mode.PROPOSED
    step: float = DEFAULT_STEP
    width_tol: float = DEFAULT_WIDTH_TOL
    zero_tol: float = DEFAULT_ZERO_TOL
    match_tol: float = DEFAULT_MATCH_TOL
    dedupe_tol: float = DEFAULT_DEDUPE_TOL

    def __post_init__(self):
        if not self.step > 0.0:
            raise ValueError(f"step must be positive, got {self.step}")
        for name in ("width_tol", "zero_tol", "match_tol", "dedupe_tol"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be non-negative")
        if self.match_tol < self.width_tol:
            raise ValueError("match_tol must be at least width_tol")


@dataclass(frozen=True)
class CommonEigenReport:
    """Everything one pipeline run produced, including instrumentation."""

    mode: Mode
    interval_a: RealInterval
    interval_b: RealInterval
    search_interval_a: RealInterval
    search_interval_b: RealInterval
    roots_a: tuple[RootEstimate, ...]
    roots_b: tuple[RootEstimate, ...]
    common: tuple[float, ...]
    eval_count_a: int
    eval_count_b: int
    wall_time: float


@dataclass(frozen=True)
class BenchmarkSummary:
    """Side-by-side comparison of the two modes on one matrix pair."""

    repetitions: int
    proposed: CommonEigenReport
    conventional: CommonEigenReport
    proposed_median_time: float
    conventional_median_time: float
    proposed_evals: int
    conventional_evals: int
    eval_ratio: float
    speedup: float
    modes_agree: bool


class _CountedFn:
    """Wrap a scalar function, counting invocations."""

    __slots__ = ("_fn", "count")

    def __init__(self, fn):
        self._fn = fn
        self.count = 0

    def __call__(self, x):
        self.count += 1
        return self._fn(x)


def match_roots(
    roots_a: Sequence[RootEstimate],
    roots_b: Sequence[RootEstimate],
    match_tol: float,
) -> tuple[float, ...]:
    """Pair roots across two ascending lists; return pair midpoints, sorted.

    Greedy two-pointer walk: the first pair within match_tol is taken and
    both members consumed, so each root participates in at most one pair.
    """
    out = []
    i = j = 0
    while i < len(roots_a) and j < len(roots_b):
        ra = roots_a[i].value
        rb = roots_b[j].value
        if abs(ra - rb) <= match_tol:
            out.append(0.5 * (ra + rb))
            i += 1
            j += 1
        elif ra < rb:
            i += 1
        else:
            j += 1
    out.sort()
    return tuple(out)


def common_eigenvalues(
    matrix_a: DenseMatrix,
    matrix_b: DenseMatrix,
    config: AnalysisConfig | None = None,
) -> CommonEigenReport:
    """Run the full pipeline on a pair of matrices.

    Bounds each matrix on the real axis, picks the search interval(s) for
    the configured mode, finds each matrix's real roots there, and matches
    them across matrices.  An empty intersection short-circuits: no
    evaluations at all, an empty common set, and that is a success, not an
    error.  The two matrices may have different orders.
    """
    cfg = config if config is not None else AnalysisConfig()
    if cfg.mode is Mode.BOTH:
        raise ValueError(
            "common_eigenvalues needs a concrete mode; run once per mode "
            "or use run_benchmark"
        )

    start = time.perf_counter()
    interval_a = matrix_bounds(matrix_a)
    interval_b = matrix_bounds(matrix_b)
    if cfg.mode is Mode.PROPOSED:
        search_a = search_b = intersect(interval_a, interval_b)
    else:
        search_a, search_b = interval_a, interval_b

    counted_a = _CountedFn(lambda lam: char_fn(matrix_a, lam))
    counted_b = _CountedFn(lambda lam: char_fn(matrix_b, lam))
    roots_a = (
        ()
        if search_a.empty
        else tuple(
            find_real_roots(
                counted_a, search_a, cfg.step, cfg.width_tol, cfg.zero_tol, cfg.dedupe_tol
            )
        )
    )
    roots_b = (
        ()
        if search_b.empty
        else tuple(
            find_real_roots(
                counted_b, search_b, cfg.step, cfg.width_tol, cfg.zero_tol, cfg.dedupe_tol
            )
        )
    )
    common = match_roots(roots_a, roots_b, cfg.match_tol)
    elapsed = time.perf_counter() - start

    return CommonEigenReport(
        mode=cfg.mode,
        interval_a=interval_a,
        interval_b=interval_b,
        search_interval_a=search_a,
        search_interval_b=search_b,
        roots_a=roots_a,
        roots_b=roots_b,
        common=common,
        eval_count_a=counted_a.count,
        eval_count_b=counted_b.count,
        wall_time=elapsed,
    )


def _subset_within(smaller: Sequence[float], larger: Sequence[float], tol: float) -> bool:
    return all(any(abs(s - l) <= tol for l in larger) for s in smaller)


def run_benchmark(
    matrix_a: DenseMatrix,
    matrix_b: DenseMatrix,
    config: AnalysisConfig | None = None,
    repetitions: int = 10,
) -> BenchmarkSummary:
    """Time both modes on the same pair and compare their work.

    Runs each mode ``repetitions`` times (the configured mode is ignored;
    both always run) and reports median wall times, total evaluation
    counts, their ratio, and the time speedup, all conventional over
    proposed.  The proposed mode searches a sub-interval of what the
    conventional mode searches, so every common value it reports must also
    be reported conventionally; a violation raises InconsistentModesError.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    cfg = config if config is not None else AnalysisConfig()

    reports = {}
    medians = {}
    for mode in (Mode.PROPOSED, Mode.CONVENTIONAL):
        runs = [
            common_eigenvalues(matrix_a, matrix_b, replace(cfg, mode=mode))
            for _ in range(repetitions)
        ]
        reports[mode] = runs[-1]
        medians[mode] = statistics.median(r.wall_time for r in runs)

    proposed = reports[Mode.PROPOSED]
    conventional = reports[Mode.CONVENTIONAL]
    if not _subset_within(proposed.common, conventional.common, cfg.match_tol):
        raise InconsistentModesError(
            "intersected-interval search reported a common value the "
            f"full-interval search did not: {proposed.common} vs {conventional.common}"
        )
    modes_agree = len(proposed.common) == len(conventional.common) and _subset_within(
        conventional.common, proposed.common, cfg.match_tol
    )

    prop_evals = proposed.eval_count_a + proposed.eval_count_b
    conv_evals = conventional.eval_count_a + conventional.eval_count_b
    if prop_evals == 0:
        eval_ratio = 1.0 if conv_evals == 0 else math.inf
    else:
        eval_ratio = conv_evals / prop_evals
    if medians[Mode.PROPOSED] == 0.0:
        speedup = 1.0 if medians[Mode.CONVENTIONAL] == 0.0 else math.inf
    else:
        speedup = medians[Mode.CONVENTIONAL] / medians[Mode.PROPOSED]

    return BenchmarkSummary(
        repetitions=repetitions,
        proposed=proposed,
        conventional=conventional,
        proposed_median_time=medians[Mode.PROPOSED],
        conventional_median_time=medians[Mode.CONVENTIONAL],
        proposed_evals=prop_evals,
        conventional_evals=conv_evals,
        eval_ratio=eval_ratio,
        speedup=speedup,
        modes_agree=modes_agree,
    )
