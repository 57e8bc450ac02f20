"""Matrix parsing, LU factorization, determinants, characteristic function."""

import math

import numpy as np
import pytest

from common_eig import (
    DenseMatrix,
    EmptyInputError,
    NonFiniteValueError,
    NonNumericTokenError,
    NonSquareError,
    TrailingContentError,
    char_fn,
    determinant,
    lu_factor,
    matrix_bounds,
    parse_matrix,
    render_matrix,
)
from conftest import A_TEXT
from oracles import cofactor_determinant


# ---------------------------------------------------------------- parsing

def test_parse_minimal():
    m = parse_matrix("1\n7\n")
    assert m.order == 1
    assert m.entries[0, 0] == 7.0


def test_parse_reference_matrix():
    m = parse_matrix(A_TEXT)
    assert m.order == 3
    assert m.entries.tolist() == [[3, 1, 4], [0, 2, 6], [0, 0, 5]]


def test_parse_ragged_row():
    with pytest.raises(NonSquareError):
        parse_matrix("2\n1 2\n3\n")


def test_parse_missing_rows():
    with pytest.raises(NonSquareError):
        parse_matrix("3\n1 2 3\n4 5 6\n")


def test_parse_empty_input():
    with pytest.raises(EmptyInputError):
        parse_matrix("")
    with pytest.raises(EmptyInputError):
        parse_matrix("\n# only a comment\n   \n")


def test_parse_skips_comments_and_blanks():
    text = "# order\n\n2\n# rows follow\n1 2\n\n3 4\n"
    m = parse_matrix(text)
    assert m.entries.tolist() == [[1, 2], [3, 4]]


def test_parse_trailing_content():
    with pytest.raises(TrailingContentError):
        parse_matrix("2\n1 2\n3 4\n5 6\n")


def test_parse_bad_token_reports_position():
    with pytest.raises(NonNumericTokenError) as exc_info:
        parse_matrix("2\n1 x\n3 4\n")
    assert exc_info.value.line == 2
    assert exc_info.value.column == 3
    assert "line 2" in str(exc_info.value)


def test_parse_bad_order_line():
    with pytest.raises(NonNumericTokenError):
        parse_matrix("two\n1 2\n3 4\n")
    with pytest.raises(NonNumericTokenError):
        parse_matrix("0\n")
    with pytest.raises(NonNumericTokenError):
        parse_matrix("2 2\n1 2\n3 4\n")


def test_parse_rejects_non_finite():
    with pytest.raises(NonFiniteValueError):
        parse_matrix("1\ninf\n")
    with pytest.raises(NonFiniteValueError):
        parse_matrix("1\nnan\n")


def test_parse_scientific_notation():
    m = parse_matrix("2\n1e2 -3.5E-1\n+0.25 2.0e0\n")
    assert m.entries.tolist() == [[100.0, -0.35], [0.25, 2.0]]


def test_render_parse_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        m = DenseMatrix(rng.normal(size=(n, n)) * 10.0 ** rng.integers(-8, 9))
        assert parse_matrix(render_matrix(m)) == m


# ---------------------------------------------------------- DenseMatrix

def test_dense_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        DenseMatrix([[1.0, 2.0]])
    with pytest.raises(ValueError):
        DenseMatrix(np.zeros((0, 0)))
    with pytest.raises(ValueError):
        DenseMatrix([[1.0, math.nan], [0.0, 1.0]])


def test_dense_matrix_is_immutable():
    m = DenseMatrix.identity(3)
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5.0


def test_identity_and_equality():
    assert DenseMatrix.identity(2) == DenseMatrix([[1.0, 0.0], [0.0, 1.0]])
    assert DenseMatrix.identity(2) != DenseMatrix([[1.0, 0.0], [0.0, 2.0]])


# -------------------------------------------------------------------- LU

def test_lu_identity():
    lu = lu_factor(DenseMatrix.identity(3))
    assert lu.parity == 1
    assert not lu.singular
    assert np.diagonal(lu.packed).tolist() == [1.0, 1.0, 1.0]


def test_lu_single_swap():
    lu = lu_factor(DenseMatrix([[0.0, 1.0], [1.0, 0.0]]))
    assert lu.parity == -1
    assert not lu.singular


def test_lu_rank_deficient():
    lu = lu_factor(DenseMatrix([[1.0, 2.0], [2.0, 4.0]]))
    assert lu.singular


def test_lu_reconstructs_permuted_matrix():
    rng = np.random.default_rng(11)
    for _ in range(20):
        n = int(rng.integers(1, 8))
        a = rng.normal(size=(n, n))
        lu = lu_factor(DenseMatrix(a))
        assert not lu.singular
        lower = np.tril(lu.packed, -1) + np.eye(n)
        upper = np.triu(lu.packed)
        assert sorted(lu.perm.tolist()) == list(range(n))
        np.testing.assert_allclose(a[lu.perm], lower @ upper, atol=1e-12)


# ------------------------------------------------------------ determinant

def test_determinant_identity():
    assert determinant(DenseMatrix.identity(4)) == 1.0


def test_determinant_triangular_reference(mat_a):
    assert determinant(mat_a) == pytest.approx(30.0, abs=1e-12)


def test_determinant_single_transposition():
    assert determinant(DenseMatrix([[0.0, 1.0], [1.0, 0.0]])) == -1.0


def test_determinant_matches_cofactor_oracle():
    rng = np.random.default_rng(23)
    for _ in range(60):
        n = int(rng.integers(1, 6))
        a = rng.integers(-9, 10, (n, n)).astype(float)
        ours = determinant(DenseMatrix(a))
        ref = cofactor_determinant(a)
        assert ours == pytest.approx(ref, rel=1e-9, abs=1e-9)


def test_determinant_triangular_is_diagonal_product():
    rng = np.random.default_rng(31)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        t = np.triu(rng.uniform(-5, 5, (n, n)))
        ref = float(np.prod(np.diagonal(t)))
        assert determinant(DenseMatrix(t)) == pytest.approx(ref, rel=1e-12, abs=1e-12)


# ----------------------------------------------------------------- char_fn

def test_char_fn_reference_values(mat_a, mat_b):
    assert char_fn(mat_a, 0.0) == pytest.approx(-30.0, abs=1e-12)
    assert char_fn(mat_b, 0.1) == pytest.approx(-10.179, abs=1e-12)
    assert char_fn(mat_a, 3.0) == 0.0
    assert char_fn(mat_b, 3.0) == 0.0


def test_char_fn_at_eigenvalue_of_identity():
    assert char_fn(DenseMatrix.identity(2), 1.0) == 0.0


def test_char_fn_positive_above_upper_bound():
    rng = np.random.default_rng(41)
    for _ in range(30):
        n = int(rng.integers(1, 7))
        m = DenseMatrix(rng.uniform(-3, 3, (n, n)))
        upper = matrix_bounds(m).hi
        assert char_fn(m, upper + 1.0) > 0.0


def test_char_fn_triangular_closed_form():
    rng = np.random.default_rng(43)
    for _ in range(20):
        t = np.triu(rng.uniform(-4, 4, (3, 3)))
        m = DenseMatrix(t)
        d = np.diagonal(t)
        for lam in rng.uniform(-6, 6, 5):
            ref = float((lam - d[0]) * (lam - d[1]) * (lam - d[2]))
            assert char_fn(m, lam) == pytest.approx(ref, rel=1e-10, abs=1e-10)


def test_char_fn_rejects_non_finite_argument(mat_a):
    with pytest.raises(ValueError):
        char_fn(mat_a, math.nan)
    with pytest.raises(ValueError):
        char_fn(mat_a, math.inf)
