"""Real eigenvalue localization and common-eigenvalue detection.

The package bounds the real eigenvalues of a square matrix with
Gerschgorin discs, locates them by scanning the characteristic function
f(lambda) = det(lambda*I - M) for zeros and sign changes followed by
bisection, and detects eigenvalues shared by two matrices by searching
only the intersection of their inclusion intervals.
"""

from .errors import (
    CommonEigError,
    EmptyDiscListError,
    EmptyInputError,
    EmptyIntervalError,
    InconsistentModesError,
    InvalidBracketError,
    MatrixFormatError,
    MaxIterExceededError,
    NonFiniteValueError,
    NonNumericTokenError,
    NonPositiveStepError,
    NonSquareError,
    TrailingContentError,
)
from .gerschgorin import (
    EMPTY_INTERVAL,
    Axis,
    Disc,
    RealInterval,
    col_discs,
    intersect,
    interval_of,
    matrix_bounds,
    row_discs,
)
from .matrix import (
    DenseMatrix,
    LUFactors,
    char_fn,
    determinant,
    lu_factor,
    parse_matrix,
    render_matrix,
)
from .pipeline import (
    AnalysisConfig,
    BenchmarkSummary,
    CommonEigenReport,
    Mode,
    common_eigenvalues,
    match_roots,
    run_benchmark,
)
from .reporting import emit_json_report, emit_scan_table, render_svg
from .rootfind import (
    RootEstimate,
    RootOrigin,
    ScanEvent,
    ScanRecord,
    bisect,
    find_real_roots,
    scan,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "CommonEigError",
    "MatrixFormatError",
    "EmptyInputError",
    "NonSquareError",
    "NonNumericTokenError",
    "NonFiniteValueError",
    "TrailingContentError",
    "EmptyDiscListError",
    "EmptyIntervalError",
    "NonPositiveStepError",
    "InvalidBracketError",
    "MaxIterExceededError",
    "InconsistentModesError",
    # matrices and determinants
    "DenseMatrix",
    "LUFactors",
    "parse_matrix",
    "render_matrix",
    "lu_factor",
    "determinant",
    "char_fn",
    # disc geometry
    "Axis",
    "Disc",
    "RealInterval",
    "EMPTY_INTERVAL",
    "row_discs",
    "col_discs",
    "interval_of",
    "intersect",
    "matrix_bounds",
    # scalar root finding
    "ScanEvent",
    "ScanRecord",
    "RootOrigin",
    "RootEstimate",
    "scan",
    "bisect",
    "find_real_roots",
    # pipeline
    "Mode",
    "AnalysisConfig",
    "CommonEigenReport",
    "BenchmarkSummary",
    "common_eigenvalues",
    "match_roots",
    "run_benchmark",
    # emitters
    "render_svg",
    "emit_scan_table",
    "emit_json_report",
]
