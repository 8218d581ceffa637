"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (with its timing) that is printed in the
pytest terminal summary; ``python3 tests/test_acceptance.py`` prints the same
lines without pytest.  Criteria with a runtime budget fail when the budget is
exceeded, even if every value is right.
"""

from __future__ import annotations

import os
import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction

import pytest

from genocchi import classical
from genocchi import verify as vf

RESULTS: dict = {}


def record(number: int, title: str, ok: bool, elapsed: float, budget: float | None,
           detail: str) -> None:
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" (budget {budget:g}s)" if budget is not None else ""
    RESULTS[number] = (f"criterion {number:2d} {status}  {title}: {detail}; "
                       f"{elapsed:.2f}s{limit}")
    assert ok, RESULTS[number]
    assert within, RESULTS[number]


def suite_detail(verdicts) -> tuple[bool, str]:
    s = vf.summary(verdicts)
    detail = f"{s['passed']}/{s['total']} verdicts pass"
    if s["failed"]:
        by_identity = Counter(v.identity for v in verdicts if v.counts_as_failure)
        by_d = Counter(v.params.get("d") for v in verdicts if v.counts_as_failure)
        detail += (" (failures by identity " + dict(sorted(by_identity.items())).__repr__()
                   + ", by d " + dict(sorted(by_d.items())).__repr__() + ")")
    return s["failed"] == 0, detail


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_01_classical_values():
    G, elapsed = timed(lambda: classical.genocchi_numbers(12))
    evens = [G[n] for n in range(2, 13, 2)]
    odds = [G[n] for n in (3, 5, 7, 9, 11)]
    ok = (evens == [-1, 1, -3, 17, -155, 2073] and G[1] == 1 and odds == [0] * 5
          and all(isinstance(g, Fraction) and g.denominator == 1 for g in G))
    record(1, "classical values", ok, elapsed, 1.0,
           f"G_2..G_12 even = {[int(g) for g in evens]}, G_1 = {G[1]}")


def test_criterion_02_bridge_identity():
    def work():
        G = classical.genocchi_numbers(30)
        B = classical.bernoulli_numbers(30)
        return [(G[2 * n], 2 * (1 - 2 ** (2 * n)) * B[2 * n],
                 2 * n * classical.euler_poly(2 * n - 1, 0)) for n in range(1, 16)]
    rows, elapsed = timed(work)
    good = sum(a == b == c for a, b, c in rows)
    record(2, "bridge identity", good == 15, elapsed, 1.0, f"{good}/15 indices exact")


def test_criterion_03_prime_scan():
    hits, elapsed = timed(lambda: classical.genocchi_prime_scan(100))
    record(3, "prime scan", hits == [6, 8], elapsed, 5.0, f"|G_n| prime for n in {hits}")


def run_suite(name: str, grid=None):
    return timed(lambda: vf.run(name, grid or vf.Grid()))


def test_criterion_04_classical_limit():
    verdicts, elapsed = run_suite("limit")
    ok, detail = suite_detail(verdicts)
    record(4, "classical limit", ok, elapsed, 30.0, detail)


def test_criterion_05_oracle_agreement():
    verdicts, elapsed = run_suite("oracle", vf.Grid(tol=1e-6))
    ok, detail = suite_detail(verdicts)
    worst = max(abs(complex(v.lhs) - complex(v.rhs)) for v in verdicts)
    record(5, "oracle agreement", ok, elapsed, 30.0, f"{detail}, worst |diff| {worst:.1e}")


def test_criterion_06_distribution_and_shift():
    (dist, t1) = run_suite("distribution")
    (shift, t2) = run_suite("shift")
    ok, detail = suite_detail(dist + shift)
    record(6, "distribution and shift", ok, t1 + t2, 30.0, detail)


def test_criterion_07_reflection_symmetry():
    verdicts, elapsed = run_suite("symmetry")
    assert all(v.params["chi"].startswith(("principal", "quadratic")) for v in verdicts)
    ok, detail = suite_detail(verdicts)
    record(7, "reflection symmetry", ok, elapsed, 20.0, detail)


def test_criterion_08_structural_vanishing():
    verdicts, elapsed = run_suite("vanishing")
    families = {v.params["family"] for v in verdicts}
    ok, detail = suite_detail(verdicts)
    record(8, "structural vanishing", ok and families == {"r", "hr", "barnes"}, elapsed, None,
           f"{detail} over families {sorted(families)}")


def test_criterion_09_qcalculus():
    verdicts, elapsed = run_suite("pascal")
    kinds = {v.identity for v in verdicts}
    expected = {"binom-symmetry", "binom-polynomial", "pascal-A", "pascal-B",
                "q-binomial-expansion", "inv-pochhammer", "binom-coherence"}
    ok, detail = suite_detail(verdicts)
    record(9, "q-calculus", ok and kinds == expected, elapsed, 5.0, detail)


COMMANDS = [
    ["classical", "--n-max", "30"],
    ["classical", "--d", "3", "--char", "quadratic", "--r", "2", "--x", "1"],
    ["q", "--backend", "symbolic", "--r", "2", "--d", "3", "--char", "quadratic"],
    ["q", "--backend", "float", "--q", "0.3+0.2i", "--r", "2", "--format", "json"],
    ["hq", "--q", "1/3", "--r", "2", "--h", "3", "--x", "-1"],
    ["barnes", "--w", "1,2", "--q", "1/2", "--d", "3"],
    ["char", "enumerate", "--d", "15"],
    ["verify", "symmetry", "--format", "json"],
    ["verify", "oracle", "--n-max", "2"],
    ["verify", "pascal", "--n-max", "8"],
]


def cli_output(argv, seed: str) -> tuple:
    env = dict(os.environ, PYTHONHASHSEED=seed)
    proc = subprocess.run([sys.executable, "-m", "genocchi", *argv], capture_output=True,
                          env=env)
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_10_determinism():
    def work():
        # different hash seeds, so set or dict ordering cannot leak into the output
        return [cli_output(a, "1") == cli_output(a, "2") for a in COMMANDS]
    same, elapsed = timed(work)
    record(10, "determinism", all(same), elapsed, None,
           f"{sum(same)}/{len(same)} commands byte-identical across two runs")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for k in sorted(RESULTS):
        print(RESULTS[k])
