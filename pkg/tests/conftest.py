"""Shared pytest plumbing.

The acceptance tests in ``test_acceptance.py`` are numbered; after the
run a summary section prints one PASS/FAIL line per criterion so the
verdicts are readable straight off a captured ``pytest -v`` log.
"""

import re

_DESCRIPTIONS = {
    1: "eigenvalue block bounds valid on 10,000 fuzz instances (< 60 s)",
    2: "gap-aware bound never above coupling-norm / gap-quadratic bounds",
    3: "1+1 block report matches the closed-form 2x2 shift (1,000 triples)",
    4: "zero-gap limit returns the coupling norm exactly (12-decade grid)",
    5: "singular value block bounds valid on 5,000 instances, zero tails",
    6: "one-sided appended-column bound valid on 1,000 instances + anchor",
    7: "coupling norm == residual norm on 1,000 pairs, whole and per column",
    8: "certified Ritz bounds contain true errors on 1,000 oracle runs",
    9: "demo: extreme Ritz certificates < ||R|| and 10x under interior median",
    10: "solver oracles: closed forms, strike interlacing, +/- symmetry",
    11: "shifted complement at the top eigenvalue: largest eigenvalue zero",
}

_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)",
                      report.nodeid)
    if match:
        _RESULTS[int(match.group(1))] = report.outcome == "passed"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        verdict = "PASS" if _RESULTS[num] else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {num:2d} {verdict}  {_DESCRIPTIONS.get(num, '')}")
