"""Acceptance criteria 1-7, one summary line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or
``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import contextlib
import io
import time

import pytest

from totalcolor9 import suites
from totalcolor9.cli import main

SEED = 20261016


def _report(res: suites.SuiteResult) -> None:
    print(res.line())
    assert res.passed, res.detail


def test_criterion_1_charge_identity():
    t = time.perf_counter()
    res = suites.charge_identity(SEED, 1000)
    dt = time.perf_counter() - t
    res = suites.SuiteResult(res.criterion, res.name, res.passed and dt < 10,
                             f"{res.detail}, {dt:.1f}s (limit 10s)")
    _report(res)


def test_criterion_2_rule_fixtures():
    _report(suites.rules_suite())


def test_criterion_3_theorem_at_desk_scale():
    _report(suites.theorem_suite(SEED, 200))


def test_criterion_4_reducibility():
    _report(suites.reducibility_suite(SEED, samples=500, classes=False))


def test_criterion_5_audit():
    _report(suites.audit_suite(SEED, 400))


def test_criterion_6_oracles():
    _report(suites.oracle_suite(SEED, hosts=60))


def _corpus_run(seed: int) -> tuple[int, str]:
    buf = io.StringIO()
    argv = ["corpus-run", "--seed", str(seed), "--suites", "charge,rules,theorem,oracle",
            "--charge-count", "1000", "--theorem-count", "200", "--oracle-hosts", "20"]
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_criterion_7_corpus_run_deterministic():
    a, b = _corpus_run(SEED), _corpus_run(SEED)
    c = _corpus_run(SEED + 1)
    same = a == b and a[0] == 0
    res = suites.SuiteResult(7, "corpus-run determinism", same and c[1] != a[1],
                             f"two runs with seed {SEED}: {'identical' if a == b else 'different'} "
                             f"({len(a[1])} bytes, exit {a[0]}); seed {SEED + 1} differs: {c[1] != a[1]}")
    _report(res)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
