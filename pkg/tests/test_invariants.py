from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gasf.coxeter import count_coxeter
from gasf.errors import EmptyFiber, InvalidTorusElement, MalformedSpec, NotDominant, NotZeroTwisted, RankTooLarge
from gasf.invariants import (
    COMPANION,
    CONJECTURAL,
    THEOREM,
    UNKNOWN,
    dimension_regular_locus,
    dimension_regular_locus_recomputed,
    dimension_unramified,
    full_report,
    is_nonempty,
    orbit_count,
    regular_orbit_bound,
    twisted_discriminant,
    verify_lower_bound,
    zero_dim_report,
)
from gasf.root_datum import build_root_datum
from gasf.series import LaurentSeries as L
from gasf.strata import leq_Q
from gasf.torus import AbstractElement, ConcreteElement, ValuationProfile, newton_point, parse_gamma
from gasf.verify import gl2_ramified_fixture, gl2_split_fixture, sl3_ramified_fixture

from oracles import gl_eigenvalues

GL2 = build_root_datum("GL2")
A1 = build_root_datum("A1")
A2 = build_root_datum("A2")


def gl2_units(v):
    """diag(1 + pi^v, 1): profile {v}; v = 0 means the constants 2 and 1."""
    first = [2] if v == 0 else [1] + [0] * (v - 1) + [1]
    return ConcreteElement(GL2, GL2.zero(), (L.polynomial(first), L.constant(1)))


def a2_generic():
    return ConcreteElement(A2, A2.zero(), (L.constant(2), L.constant(5)))


ALPHA = GL2.coweight([1, -1])
THETA = A2.coweight([1, 1])


def test_nonempty_examples():
    _, g, lam = gl2_split_fixture()
    assert is_nonempty(g, lam)
    # (0, 1) is not dominant; the Newton test alone says no
    assert not leq_Q(GL2, newton_point(g), GL2.coweight([0, 1]))
    with pytest.raises(NotDominant):
        is_nonempty(g, GL2.coweight([0, 1]))
    assert is_nonempty(a2_generic(), THETA)


def test_dimension_unramified_examples():
    _, g, lam = gl2_split_fixture()
    assert dimension_unramified(g, lam) == 0
    assert dimension_unramified(gl2_units(0), ALPHA) == 1
    assert dimension_unramified(gl2_units(2), ALPHA) == 3
    with pytest.raises(EmptyFiber):
        dimension_unramified(gl2_units(1), GL2.coweight([1, 1]))
    _, h, lam = gl2_ramified_fixture()
    with pytest.raises(InvalidTorusElement):
        dimension_unramified(h, lam)


def test_dimension_regular_examples():
    for v in range(3):
        g = gl2_units(v)
        assert dimension_regular_locus(g, ALPHA) == dimension_unramified(g, ALPHA)
    _, g, lam = gl2_ramified_fixture()
    assert dimension_regular_locus(g, lam) == 0
    _, g, lam = sl3_ramified_fixture()
    assert dimension_regular_locus(g, lam) == 2 + Fraction(2 - 2, 2)
    assert dimension_regular_locus_recomputed(g, lam) == dimension_regular_locus(g, lam)


def test_twisted_discriminant_examples():
    _, g, lam = gl2_split_fixture()
    assert twisted_discriminant(g, lam) == 0
    assert twisted_discriminant(gl2_units(2), ALPHA) == 6


def test_zero_dim_examples():
    _, g, lam = gl2_split_fixture()
    rep = zero_dim_report(g, lam)
    assert (rep["dim"], rep["torsor"], rep["count"]) == (0, True, 1)
    rigid = ConcreteElement(A1, A1.coweight([1]), (L.constant(2),))
    rep = zero_dim_report(rigid, A1.coweight([1]))
    assert (rep["dim"], rep["torsor"], rep["count"]) == (0, True, 1)
    with pytest.raises(NotZeroTwisted):
        zero_dim_report(gl2_units(1), ALPHA)


def test_orbit_count_examples():
    assert orbit_count(gl2_units(0), ALPHA) == (1, THEOREM)
    assert orbit_count(a2_generic(), THETA) == (2, THEOREM)
    assert orbit_count(a2_generic(), A2.zero()) == (1, THEOREM)
    _, g, lam = sl3_ramified_fixture()
    assert orbit_count(g, lam) == (2, CONJECTURAL)


def test_regular_bound_examples():
    assert regular_orbit_bound(a2_generic(), 2 * THETA) == (2, True)
    assert regular_orbit_bound(a2_generic(), A2.zero()) == (count_coxeter(A2), False)
    a1a1 = build_root_datum("A1*A1")
    g = ConcreteElement(a1a1, a1a1.zero(), (L.constant(2), L.constant(3)))
    assert regular_orbit_bound(g, a1a1.coweight([2, 2]))[0] == 1


@pytest.mark.parametrize("name,radius,bound", [("A2", 3, 2), ("A1", 3, 1), ("G2", 2, 2)])
def test_lower_bound_scans(name, radius, bound):
    scan = verify_lower_bound(build_root_datum(name), radius)
    assert scan.passed and scan.bound == bound and scan.minimum_attained and scan.pairs > 0


def test_lower_bound_limits():
    with pytest.raises(RankTooLarge):
        verify_lower_bound(build_root_datum("A4"), 1)
    with pytest.raises(MalformedSpec):
        verify_lower_bound(A2, 9)


def test_full_report_fixtures():
    _, g, lam = gl2_split_fixture()
    rep = full_report(g, lam)
    assert rep.nonempty and rep.dim_total == 0 and rep.dim_regular == 0
    assert (rep.orbit_count, rep.orbit_count_tag) == (1, THEOREM)
    assert rep.d == -1 and rep.d_lambda == 0 and rep.zero_dimensional
    empty = full_report(g, GL2.coweight([2, 2])).to_json()
    assert empty["nonempty"] is False and "d" not in empty and "dim_total" not in empty
    rep = full_report(a2_generic(), THETA)
    assert rep.dim_total == 2 and (rep.orbit_count, rep.orbit_count_tag) == (2, THEOREM)
    assert (rep.regular_orbit_bound, rep.regular_bound_exact) == (2, True)


def test_full_report_ramified():
    _, g, lam = sl3_ramified_fixture()
    rep = full_report(g, lam)
    assert rep.dim_total == UNKNOWN and rep.dim_total_tag == COMPANION
    assert rep.dim_regular == 2 and rep.c == 2 and rep.d == 2
    assert rep.to_json()["dim_total_companion"] == "2"
    _, g, lam = gl2_ramified_fixture()
    rep = full_report(g, lam)
    assert rep.dim_regular == 0 and rep.d_lambda == 1 and not rep.zero_dimensional
    assert rep.orbit_count_tag == CONJECTURAL


# -- properties ---------------------------------------------------------------

unit = st.lists(st.integers(-3, 3), min_size=1, max_size=4).filter(lambda u: u[0] != 0)


@st.composite
def gl_case(draw):
    n = draw(st.sampled_from([2, 3]))
    mu = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    units = draw(st.lists(unit, min_size=n, max_size=n))
    xs = gl_eigenvalues(mu, units)
    assume(all(xs[i] != xs[j] for i in range(n) for j in range(i)))
    d = build_root_datum(f"GL{n}")
    g = ConcreteElement(d, d.coweight(mu), tuple(L.polynomial(u) for u in units))
    lam = sorted(draw(st.lists(st.integers(-3, 3), min_size=n - 1, max_size=n - 1)) + [0], reverse=True)
    lam[-1] += sum(mu) - sum(lam)  # same determinant as gamma
    assume(lam == sorted(lam, reverse=True))
    return d, g, d.coweight(lam)


@given(gl_case())
def test_dimension_formulas_agree(case):
    d, g, lam = case
    if not is_nonempty(g, lam):
        return
    assert dimension_regular_locus(g, lam) == dimension_unramified(g, lam)
    assert dimension_regular_locus_recomputed(g, lam) == dimension_regular_locus(g, lam)
    dl = twisted_discriminant(g, lam)
    assert dl >= 0
    zero = newton_point(g) == lam and g.profile.is_zero()
    assert (dl == 0) == zero
    if zero:
        zero_dim_report(g, lam)
    else:
        with pytest.raises(NotZeroTwisted):
            zero_dim_report(g, lam)


@given(gl_case(), st.integers(0, 1))
def test_nonempty_is_monotone(case, i):
    d, g, lam = case
    bigger = lam + d.simple_coroots[i % d.rank]
    if is_nonempty(g, lam) and d.is_dominant(bigger):
        assert is_nonempty(g, bigger)


@given(gl_case())
def test_bound_coherence(case):
    d, g, lam = case
    if not is_nonempty(g, lam):
        return
    m, tag = orbit_count(g, lam)
    bound, exact = regular_orbit_bound(g, lam)
    assert m >= 1 and tag == THEOREM
    if exact:
        assert m >= bound


@given(st.sampled_from([0, 1]), st.sampled_from(["0", "1/3", "2/3", "1"]))
def test_sl3_coxeter_twists(word, v):
    d = build_root_datum("SL3")
    w = ["s1s2", "s2s1"][word]
    g = parse_gamma(d, {"model": "abstract", "e": 3, "w": w, "nu": [0, 0],
                        "profile": {"0": v, "1": v, "2": v}})
    lam = d.coweight([1, 1])
    assert dimension_regular_locus(g, lam) == dimension_regular_locus_recomputed(g, lam)
    assert twisted_discriminant(g, lam) >= 0


def test_unrealizable_rigid_ramified_input_warns():
    g = parse_gamma(A1, {"model": "abstract", "e": 2, "w": "s1", "nu": [0]})
    rep = full_report(g, A1.zero())
    assert rep.zero_dimensional and any("not realizable" in w for w in rep.warnings)
