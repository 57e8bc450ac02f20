"""Shared fixtures: the worked 3x3 reference pair used across the suite."""

import pytest

from common_eig import parse_matrix

# one "[PASS]/[FAIL] n: ..." line per acceptance check, echoed at the end
# of the run by pytest_terminal_summary below
ACCEPTANCE_VERDICTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)

# Upper-triangular reference matrix; spectrum is its diagonal {3, 2, 5}.
A_TEXT = "3\n3 1 4\n0 2 6\n0 0 5\n"
# Symmetric tridiagonal reference matrix; spectrum {1, 3, 4}.
B_TEXT = "3\n3 -1 0\n-1 2 -1\n0 -1 3\n"


@pytest.fixture
def mat_a():
    return parse_matrix(A_TEXT)


@pytest.fixture
def mat_b():
    return parse_matrix(B_TEXT)


@pytest.fixture
def matrix_files(tmp_path):
    path_a = tmp_path / "A.mat"
    path_b = tmp_path / "B.mat"
    path_a.write_text(A_TEXT)
    path_b.write_text(B_TEXT)
    return str(path_a), str(path_b)
