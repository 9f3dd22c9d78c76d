"""The eleven acceptance criteria, each under its wall-clock budget.

Every test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output of ``pytest -v``).  Randomized criteria use the fixed seed
below.
"""

import time
from fractions import Fraction

import pytest

from gasf import verify
from gasf.coxeter import enumerate_coxeter
from gasf.root_datum import build_root_datum

from oracles import acyclic_orientations

SEED = 20240607
pytestmark = pytest.mark.acceptance


def _report(capsys, number, title, ok, seconds, budget, extra=""):
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: "
            f"{seconds:.2f}s (budget {budget}s){' ' + extra if extra else ''}")
    with capsys.disabled():
        print("\n" + line)
    return line


def _check(capsys, number, title, budget, fn):
    t0 = time.perf_counter()
    ok, extra = fn()
    dt = time.perf_counter() - t0
    _report(capsys, number, title, ok and dt < budget, dt, budget, extra)
    assert ok, extra
    assert dt < budget, f"took {dt:.2f}s, budget {budget}s"


def test_1_coxeter_counts(capsys):
    def run():
        res = verify.suite_coxeter()
        want = {"A1": 1, "A2": 2, "A3": 4, "A4": 8, "B2": 2, "B3": 4, "G2": 2, "A1*A1": 1, "A1*A2": 2}
        bad = []
        for t, n in want.items():
            d = build_root_datum(t)
            got = len(enumerate_coxeter(d))
            if got != n or acyclic_orientations(d.cartan) != n:
                bad.append((t, got, n))
        return res.passed and not bad, f"{res.checked} types, mismatches {bad}"
    _check(capsys, 1, "Coxeter counts", 5, run)


_mult_result = {}


def test_2_multiplicity_oracles(capsys):
    def run():
        res = verify.suite_multiplicities()
        _mult_result["res"] = res
        bad = [f for f in res.failures if f[0] == "mult"]
        return not bad and res.detail["pairs"] > 0, f"{res.detail['pairs']} pairs, {len(bad)} disagreements"
    _check(capsys, 2, "Freudenthal = Kostant", 60, run)


def test_3_dimension_sum(capsys):
    # computed in the same pass as criterion 2, so it shares that budget
    t0 = time.perf_counter()
    res = _mult_result.get("res") or verify.suite_multiplicities()
    seconds = res.seconds if "res" in _mult_result else time.perf_counter() - t0
    bad = [f for f in res.failures if f[0] == "dim"]
    ok = not bad and res.detail["dimension_checks"] > 0
    _report(capsys, 3, "dimension sum", ok and seconds < 60, seconds, 60,
            f"{res.detail['dimension_checks']} highest weights, {len(bad)} mismatches")
    assert ok and seconds < 60


def test_4_lower_bound(capsys):
    def run():
        res = verify.suite_lower_bound()
        mins = {k: (v["min_multiplicity"], v["bound"]) for k, v in res.detail.items()}
        attained = all(m == b == 2 for m, b in mins.values())
        return res.passed and attained, f"{res.checked} pairs, minimum/bound {mins}"
    _check(capsys, 4, "multiplicity lower bound", 120, run)


def test_5_gl2_fixture(capsys):
    def run():
        res = verify.suite_gl2_fixture()
        rep = res.detail
        ok = (res.passed and rep["d"] == "-1" and rep["d_lambda"] == "0" and rep["dim_total"] == "0"
              and rep["zero_dimensional"] and rep["orbit_count"] == 1 and rep["orbit_count_tag"] == "THEOREM")
        return ok, f"d={rep['d']} d_lambda={rep['d_lambda']} dim={rep['dim_total']} count={rep['orbit_count']}"
    _check(capsys, 5, "GL2 end-to-end fixture", 1, run)


def test_6_meet_semilattice(capsys):
    def run():
        res = verify.suite_meet()
        return res.passed, f"{res.checked} checks, {len(res.failures)} failures"
    _check(capsys, 6, "meet semilattice", 60, run)


def test_7_stratification(capsys):
    def run():
        res = verify.suite_strata(SEED, samples=500)
        return res.passed, f"{res.checked} checks (500 per type), {len(res.failures)} failures"
    _check(capsys, 7, "stratification", 30, run)


def test_8_nonemptiness_equivalence(capsys):
    def run():
        res = verify.suite_equivalence(SEED, trials=100, trunc=16)
        return res.passed, f"{res.checked} (gamma, lambda) pairs, {len(res.failures)} disagreements"
    _check(capsys, 8, "nonemptiness equivalence", 120, run)


def test_9_discriminant_identities(capsys):
    def run():
        res = verify.suite_discriminant(SEED, samples=200)
        return res.passed and res.detail["inputs"] >= 200, f"{res.checked} checks, {len(res.failures)} failures"
    _check(capsys, 9, "discriminant identities", 30, run)


def test_10_enhanced_dominance(capsys):
    def run():
        res = verify.suite_enhanced()
        return res.passed, f"{res.checked} checks, {len(res.failures)} failures"
    _check(capsys, 10, "enhanced dominance", 30, run)


def test_11_ramified_dimension(capsys):
    def run():
        res = verify.suite_ramified()
        _, g, _ = verify.sl3_ramified_fixture()
        from gasf.torus import c_gamma
        ok = res.passed and c_gamma(g) == 2
        return ok, f"dimensions {res.detail['dims']}, c(SL3 Coxeter twist) = {c_gamma(g)}"
    _check(capsys, 11, "ramified dimension consistency", 5, run)
