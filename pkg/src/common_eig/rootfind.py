"""Real-root location by grid scanning plus bisection.

The strategy mirrors a desk calculation: walk a fixed grid across the
interval recording f at every point, accept grid points where |f| falls
below the zero tolerance directly as roots, and refine every strict sign
change between adjacent grid points with bisection.  Roots of even
multiplicity (no sign change, no grid hit) are invisible to this method, and
two roots closer together than the step can cancel inside one cell; the
mitigation for both is a smaller step.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import (
    EmptyIntervalError,
    InvalidBracketError,
    MaxIterExceededError,
    NonPositiveStepError,
)
from .gerschgorin import RealInterval

__all__ = [
    "ScanEvent",
    "RootOrigin",
    "ScanRecord",
    "RootEstimate",
    "scan",
    "bisect",
    "find_real_roots",
    "DEFAULT_STEP",
    "DEFAULT_WIDTH_TOL",
    "DEFAULT_ZERO_TOL",
    "DEFAULT_DEDUPE_TOL",
]

DEFAULT_STEP = 0.1
DEFAULT_WIDTH_TOL = 1e-10
DEFAULT_ZERO_TOL = 1e-9
DEFAULT_DEDUPE_TOL = 1e-6
DEFAULT_MAX_ITER = 200


class ScanEvent(Enum):
    NONE = "none"
    ZERO_HIT = "zero_hit"
    SIGN_CHANGE_AHEAD = "sign_change_ahead"


class RootOrigin(Enum):
    BISECTION = "bisection"
    GRID_ZERO = "grid_zero"
    ENDPOINT_ZERO = "endpoint_zero"


@dataclass(frozen=True)
class ScanRecord:
    """One grid point of a scan: the abscissa, f there, and what it triggered."""

    lam: float
    value: float
    event: ScanEvent = ScanEvent.NONE


@dataclass(frozen=True)
class RootEstimate:
    """One located real root.

    ``bracket_lo == bracket_hi == value`` for grid and endpoint zeros; for
    bisection results the bracket is the final sign-change interval, with
    ``value`` one of its endpoints.
    """

    value: float
    residual: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    origin: RootOrigin


def _opposite_signs(a: float, b: float) -> bool:
    # Sign-based, not a*b < 0: products of tiny values underflow to zero.
    return (a < 0.0 < b) or (b < 0.0 < a)


def scan(
    f: Callable[[float], float],
    interval: RealInterval,
    step: float = DEFAULT_STEP,
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> list[ScanRecord]:
    """Evaluate f on the grid lo, lo+step, ... with hi appended exactly.

    Each record carries at most one event, zero hits taking precedence:
    ZERO_HIT where |f| <= zero_tol, SIGN_CHANGE_AHEAD where f flips sign
    strictly between a grid point and its successor and neither cell
    endpoint is itself a zero hit.
    """
    if interval.empty:
        raise EmptyIntervalError("cannot scan an empty interval")
    if not step > 0.0:
        raise NonPositiveStepError(f"step must be positive, got {step}")
    if zero_tol < 0.0:
        raise ValueError("zero_tol must be non-negative")

    grid = []
    i = 0
    while True:
        x = interval.lo + i * step
        if x >= interval.hi:
            break
        grid.append(x)
        i += 1
    grid.append(interval.hi)

    values = [float(f(x)) for x in grid]
    events = [
        ScanEvent.ZERO_HIT if abs(v) <= zero_tol else ScanEvent.NONE for v in values
    ]
    for j in range(len(grid) - 1):
        if (
            events[j] is ScanEvent.NONE
            and events[j + 1] is not ScanEvent.ZERO_HIT
            and _opposite_signs(values[j], values[j + 1])
        ):
            events[j] = ScanEvent.SIGN_CHANGE_AHEAD
    return [ScanRecord(x, v, e) for x, v, e in zip(grid, values, events)]


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    width_tol: float = DEFAULT_WIDTH_TOL,
    zero_tol: float = DEFAULT_ZERO_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootEstimate:
    """Refine a strict sign-change bracket [lo, hi] to a root.

    Halves the bracket keeping the sign change, stopping as soon as the
    midpoint residual falls within zero_tol or the surviving bracket is no
    wider than width_tol.  Costs exactly 2 + iterations evaluations of f:
    the bracket-end values are computed once and reused.
    """
    if width_tol < 0.0 or zero_tol < 0.0:
        raise ValueError("tolerances must be non-negative")
    if not lo < hi:
        raise InvalidBracketError(f"bracket is empty or reversed: [{lo}, {hi}]")
    flo = float(f(lo))
    fhi = float(f(hi))
    if not _opposite_signs(flo, fhi):
        raise InvalidBracketError(
            f"f({lo}) = {flo} and f({hi}) = {fhi} do not change sign"
        )

    iterations = 0
    while iterations < max_iter:
        mid = 0.5 * (lo + hi)
        fmid = float(f(mid))
        iterations += 1
        if abs(fmid) <= zero_tol:
            return RootEstimate(
                value=mid,
                residual=abs(fmid),
                bracket_lo=lo,
                bracket_hi=hi,
                iterations=iterations,
                origin=RootOrigin.BISECTION,
            )
        if _opposite_signs(flo, fmid):
            hi = mid
        else:
            lo, flo = mid, fmid
        if hi - lo <= width_tol:
            return RootEstimate(
                value=mid,
                residual=abs(fmid),
                bracket_lo=lo,
                bracket_hi=hi,
                iterations=iterations,
                origin=RootOrigin.BISECTION,
            )
    raise MaxIterExceededError(
        f"no convergence within {max_iter} iterations (width_tol={width_tol})"
    )


def find_real_roots(
    f: Callable[[float], float],
    interval: RealInterval,
    step: float = DEFAULT_STEP,
    width_tol: float = DEFAULT_WIDTH_TOL,
    zero_tol: float = DEFAULT_ZERO_TOL,
    dedupe_tol: float = DEFAULT_DEDUPE_TOL,
) -> list[RootEstimate]:
    """All real roots of f over a closed interval, sorted ascending.

    Grid zero hits are taken directly (grid zeros at the interval's own
    endpoints are tagged ENDPOINT_ZERO); every sign-change cell is refined
    by bisection.  Clusters of near-identical results are merged, keeping
    the smallest-residual representative, so consecutive returned roots are
    always more than dedupe_tol apart.
    """
    if dedupe_tol < 0.0:
        raise ValueError("dedupe_tol must be non-negative")
    records = scan(f, interval, step, zero_tol)
    last = len(records) - 1

    roots = []
    for idx, rec in enumerate(records):
        if rec.event is ScanEvent.ZERO_HIT:
            origin = (
                RootOrigin.ENDPOINT_ZERO
                if idx in (0, last)
                else RootOrigin.GRID_ZERO
            )
            roots.append(
                RootEstimate(
                    value=rec.lam,
                    residual=abs(rec.value),
                    bracket_lo=rec.lam,
                    bracket_hi=rec.lam,
                    iterations=0,
                    origin=origin,
                )
            )
        elif rec.event is ScanEvent.SIGN_CHANGE_AHEAD:
            roots.append(
                bisect(f, rec.lam, records[idx + 1].lam, width_tol, zero_tol)
            )

    roots.sort(key=lambda r: r.value)
    merged = []
    i = 0
    while i < len(roots):
        j = i
        while j + 1 < len(roots) and roots[j + 1].value - roots[j].value <= dedupe_tol:
            j += 1
        merged.append(min(roots[i : j + 1], key=lambda r: (r.residual, r.value)))
        i = j + 1
    return merged
