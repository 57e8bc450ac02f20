"""Dense real matrices, LU factorization, and the characteristic function.

The characteristic function ``f(lam) = det(lam*I - M)`` is the scalar whose
real roots are the real eigenvalues of ``M``.  It is evaluated through a
fresh LU factorization with partial pivoting on every call; nothing is
cached, so call counts reflect true work.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyInputError,
    NonFiniteValueError,
    NonNumericTokenError,
    NonSquareError,
    TrailingContentError,
)

__all__ = [
    "DenseMatrix",
    "LUFactors",
    "parse_matrix",
    "render_matrix",
    "lu_factor",
    "determinant",
    "char_fn",
]

# Scale-aware zero test for pivots: |pivot| <= PIVOT_RTOL * max(1, ||M||_inf)
# marks the matrix singular.  At desk scale this keeps 1e-16-level noise from
# masquerading as a nonzero pivot.
PIVOT_RTOL = 1e-13

_TOKEN = re.compile(r"\S+")
_ORDER = re.compile(r"\+?\d+")


class DenseMatrix:
    """Immutable real n-by-n matrix backed by a read-only float64 array."""

    __slots__ = ("_entries",)

    def __init__(self, entries):
        arr = np.array(entries, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must all be finite")
        arr.flags.writeable = False
        self._entries = arr

    @classmethod
    def identity(cls, order: int) -> "DenseMatrix":
        return cls(np.eye(order))

    @property
    def entries(self) -> np.ndarray:
        """The underlying (n, n) float64 array; read-only."""
        return self._entries

    @property
    def order(self) -> int:
        return self._entries.shape[0]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __repr__(self):
        return f"DenseMatrix({self._entries.tolist()!r})"


@dataclass(frozen=True)
class LUFactors:
    """Packed result of ``P*M = L*U`` with partial pivoting.

    ``packed`` holds the unit-lower-triangular multipliers strictly below the
    diagonal and the upper factor on and above it.  ``perm[i]`` is the source
    row of row ``i`` after pivoting, ``parity`` the sign of that permutation.
    When ``singular`` is set, elimination stopped at the first dead pivot
    column and the factors beyond it are not meaningful.
    """

    order: int
    packed: np.ndarray
    perm: np.ndarray
    parity: int
    singular: bool


def _significant_lines(text: str):
    """Yield (1-based line number, raw line) skipping blanks and # comments."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def parse_matrix(text: str) -> DenseMatrix:
    """Parse the plain-text matrix format.

    Blank lines and lines starting with ``#`` are ignored.  The first
    significant line holds the order n; the next n significant lines hold n
    whitespace-separated reals each (scientific notation accepted).  Any
    significant content after the n-th row is an error.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise EmptyInputError("no matrix data found")

    header_no, header = lines[0]
    tokens = list(_TOKEN.finditer(header))
    if len(tokens) != 1:
        bad = tokens[1]
        raise NonNumericTokenError(
            "matrix order line must hold a single positive integer",
            header_no,
            bad.start() + 1,
        )
    order_tok = tokens[0]
    if not _ORDER.fullmatch(order_tok.group()) or int(order_tok.group()) < 1:
        raise NonNumericTokenError(
            f"{order_tok.group()!r} is not a positive integer order",
            header_no,
            order_tok.start() + 1,
        )
    n = int(order_tok.group())

    row_lines = lines[1:]
    if len(row_lines) < n:
        raise NonSquareError(f"expected {n} rows, found {len(row_lines)}")
    if len(row_lines) > n:
        extra_no, _ = row_lines[n]
        raise TrailingContentError(f"unexpected content on line {extra_no} after row {n}")

    rows = []
    for lineno, raw in row_lines:
        toks = list(_TOKEN.finditer(raw))
        if len(toks) != n:
            raise NonSquareError(f"line {lineno}: expected {n} values, found {len(toks)}")
        row = []
        for tok in toks:
            try:
                value = float(tok.group())
            except ValueError:
                raise NonNumericTokenError(
                    f"{tok.group()!r} is not a number", lineno, tok.start() + 1
                ) from None
            if not math.isfinite(value):
                raise NonFiniteValueError(
                    f"line {lineno}: non-finite value {tok.group()!r}"
                )
            row.append(value)
        rows.append(row)
    return DenseMatrix(rows)


def render_matrix(matrix: DenseMatrix) -> str:
    """Full-precision text form; ``parse_matrix`` round-trips it exactly."""
    lines = [str(matrix.order)]
    for row in matrix.entries:
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def _lu(a: np.ndarray) -> LUFactors:
    # a is a fresh float64 square array owned by this function.
    n = a.shape[0]
    perm = np.arange(n)
    parity = 1
    singular = False
    tol = PIVOT_RTOL * max(1.0, float(np.max(np.sum(np.abs(a), axis=1))))
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) <= tol:
            singular = True
            break
        if p != k:
            a[[k, p], :] = a[[p, k], :]
            perm[[k, p]] = perm[[p, k]]
            parity = -parity
        if k + 1 < n:
            a[k + 1 :, k] /= a[k, k]
            a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k], a[k, k + 1 :])
    a.flags.writeable = False
    perm.flags.writeable = False
    return LUFactors(order=n, packed=a, perm=perm, parity=parity, singular=singular)


def lu_factor(matrix: DenseMatrix) -> LUFactors:
    """Factor ``P*M = L*U`` by Gaussian elimination with partial pivoting.

    Singularity is reported through the ``singular`` flag, never an
    exception: when every pivot candidate in a column sits at or below the
    scale-aware tolerance, the flag is set and elimination stops.
    """
    return _lu(np.array(matrix.entries, dtype=np.float64, copy=True))


def _det_from_lu(lu: LUFactors) -> float:
    if lu.singular:
        return 0.0
    return float(lu.parity * np.prod(np.diagonal(lu.packed)))


def determinant(matrix: DenseMatrix) -> float:
    """Determinant via LU: parity times the product of the pivots.

    Exactly 0.0 whenever the factorization flags the matrix singular.
    """
    return _det_from_lu(lu_factor(matrix))


def char_fn(matrix: DenseMatrix, lam: float) -> float:
    """Evaluate ``det(lam*I - M)`` at a single real ``lam``.

    Monic convention: for ``lam`` above every Gerschgorin upper bound the
    value is strictly positive.  ``lam*I - M`` is materialized freshly per
    call; the cost is one O(n^3) factorization.
    """
    lam = float(lam)
    if not math.isfinite(lam):
        raise ValueError("lam must be finite")
    shifted = lam * np.eye(matrix.order) - matrix.entries
    return _det_from_lu(_lu(shifted))
