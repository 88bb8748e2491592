"""Acceptance criteria, one test per criterion (criterion 2 per bullet).

Each test records a PASS/FAIL line, shown in the pytest terminal summary
and printed directly when run as ``python tests/test_acceptance.py``.
Set ``SIZERAMSEY_STRETCH=1`` to run the optional hours-long criterion 3.
"""

from __future__ import annotations

import os
import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from sizeramsey import suite
from sizeramsey.bounds import size_ramsey, verify_lower, witness_for
from sizeramsey.errors import RefutedLowerBound
from sizeramsey.families import family
from sizeramsey.patterns import Clique, Fan, Matching, Path, PathPack

P3, TWO_K2 = Path(3), Matching(2)


def record(criterion: str, name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {name}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def test_c1_upper_witnesses():
    res = suite.upper_witnesses()
    bad = [c["graph"] for c in res["cases"] if not (c["arrows"] and c["within_time"])]
    record("1", "upper-bound witnesses arrow, each < 1 s", res["passed"],
           f"{len(res['cases'])} witnesses" + (f", failing {bad}" if bad else ""))


def _exact_case(red, blue, value, limit, witness=None):
    case, elapsed = timed(suite._exact, red, blue, value, 1, witness)
    return case["passed"] and elapsed < limit, elapsed


def test_c2_p3_k3():
    ok, t = _exact_case(P3, Clique(3), 8, 10)
    record("2a", "r(P3, K3) = 8", ok, f"{t:.1f} s, limit 10 s")


def test_c2_2k2_k3():
    ok, t = _exact_case(TWO_K2, Clique(3), 6, 1, witness_for(TWO_K2, Clique(3)))
    record("2b", "r(2K2, K3) = 6, 2K3 arrows", ok, f"{t:.2f} s, limit 1 s")


def test_c2_p3_f2():
    ok, t = _exact_case(P3, Fan(2), 10, 120)
    record("2c", "r(P3, F2) = 10", ok, f"{t:.1f} s, limit 120 s")


def test_c2_2k2_f2():
    ok, t = _exact_case(TWO_K2, Fan(2), 12, 1800, family("TwoF2"))
    record("2d", "r(2K2, F2) = 12", ok, f"{t:.1f} s, limit 1800 s")


def test_c2_2k2_p4():
    ok, t = _exact_case(TWO_K2, Path(4), 5, 10, witness_for(TWO_K2, Path(4)))
    record("2e", "r(2K2, P4) = 5", ok, f"{t:.2f} s, limit 10 s")


def test_c2_2k2_2p3_true_value():
    """min{nm+1, (n+1)(m-1)} at n=2, m=3 is 6: no 5-edge graph arrows and 3P3 does."""
    ok, t = _exact_case(TWO_K2, PathPack(2, 3), 6, 10, family("PathUnion", 3, 3))
    record("2f", "r(2K2, 2P3) = min{7, 6} = 6", ok, f"{t:.2f} s")


@pytest.mark.xfail(strict=True, raises=RefutedLowerBound,
                   reason="3P3 has 6 edges and arrows (2K2, 2P3), so the value 7 cannot hold")
def test_c2_2k2_2p3_as_stated():
    try:
        verify_lower(TWO_K2, PathPack(2, 3), 6)
    except RefutedLowerBound as err:
        ACCEPTANCE_LINES.append(
            f"FAIL criterion 2f': r(2K2, 2P3) = 7 as stated; exhausting q = 6 finds arrowing graph(s) "
            f"{err.record.arrowing} (expected failure, see notes)")
        raise
    record("2f'", "r(2K2, 2P3) = 7 as stated", True)


def test_c2_matchings_generic():
    start = time.perf_counter()
    values = {}
    for n1 in (1, 2, 3):
        for n2 in (1, 2, 3):
            rep = size_ramsey(Matching(n1), Matching(n2), budget=n1 + n2 - 1, generic=True)
            values[(n1, n2)] = rep.value
    elapsed = time.perf_counter() - start
    ok = all(v == n1 + n2 - 1 for (n1, n2), v in values.items()) and elapsed < 60
    record("2g", "r(n1K2, n2K2) = n1+n2-1 for n1, n2 <= 3 (generic avoiders)", ok, f"{elapsed:.1f} s")


def test_c3_stretch_p3_f3():
    if os.environ.get("SIZERAMSEY_STRETCH") != "1":
        ACCEPTANCE_LINES.append("SKIP criterion 3: optional (P3, F3) sweep at q = 15; set SIZERAMSEY_STRETCH=1")
        pytest.skip("optional, runs for hours")
    res = suite.stretch_p3_f3(workers=os.cpu_count() or 1)
    record("3", "r(P3, F3) > 15 with the max-degree >= 6 prune", res["passed"])


def test_c4_connected_sweeps():
    res, elapsed = timed(suite.connected_sweeps)
    counts = {(c["n"], c["m"]): c["graphs"] for c in res["cases"]}
    record("4", "connected nm-edge graphs never arrow (2K2, nPm)", res["passed"] and elapsed < 300,
           f"graphs {counts}, {elapsed:.1f} s")


def test_c5_oracle_equivalence():
    res, elapsed = timed(suite.oracle_equivalence, 8)
    case = res["cases"][0]
    total = sum(x["graphs"] for x in case["per_q"])
    record("5", "specialised avoiders agree with 2^|E| brute force, all graphs <= 8 edges",
           res["passed"] and elapsed < 600,
           f"{total} graphs, {len(case['disagreements'])} disagreements, {elapsed:.1f} s")


def test_c6_matching_exactness():
    res = suite.matching_exactness()
    case = res["cases"][0]
    record("6", "max_matching agrees with the exhaustive oracle", res["passed"],
           f"{case['samples']} graphs, {case['odd_cycle_rich']} odd-cycle rich, {len(case['disagreements'])} bad")


def test_c7_period3():
    res = suite.period3_property()
    record("7", "period-3 colouring: blue matching ceil(l/3), red a matching, l = 3..20", res["passed"])


def test_c8_term_table():
    res = suite.inequality_terms()
    record("8", "degree-bound term table for all parameters <= 20", res["passed"])


def test_c9_enumeration_counts():
    res = suite.enumeration_counts(5)
    counts = [c["classes"] for c in res["cases"]]
    record("9", "enumeration counts and labelled-graph oracle", res["passed"], f"q=1..5: {counts}")


def _verify_cli(threads: int) -> bytes:
    cmd = [sys.executable, "-m", "sizeramsey.cli", "verify-paper", "--level", "quick", "--threads", str(threads),
           "--quiet"]
    proc = subprocess.run(cmd, capture_output=True, timeout=1800)
    assert proc.returncode == 0, proc.stderr.decode()
    return proc.stdout


def test_c10_determinism():
    one = _verify_cli(1)
    two = _verify_cli(2)
    record("10", "verify-paper --level quick is byte-identical at 1 and 2 threads", one == two,
           f"{len(one)} bytes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
