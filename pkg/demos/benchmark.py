"""
Measuring what the restricted search saves
==========================================

Runs both search modes repeatedly on the same pair and compares medians.
The evaluation ratio is deterministic; wall-clock speedup tracks it
closely because each determinant evaluation costs about the same.
"""

from pathlib import Path

from common_eig import parse_matrix, run_benchmark

data = Path(__file__).resolve().parent / "data"
a = parse_matrix((data / "A.mat").read_text())
b = parse_matrix((data / "B.mat").read_text())

summary = run_benchmark(a, b, repetitions=25)

print(f"repetitions:  {summary.repetitions}")
print(
    f"proposed:     {summary.proposed_evals} evaluations, "
    f"median {summary.proposed_median_time:.6f}s"
)
print(
    f"conventional: {summary.conventional_evals} evaluations, "
    f"median {summary.conventional_median_time:.6f}s"
)
print(f"eval ratio:   {summary.eval_ratio:.4f}")
print(f"speedup:      {summary.speedup:.4f}")
print(f"modes agree:  {summary.modes_agree}")
print(f"common:       {[round(v, 10) for v in summary.proposed.common]}")
