from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gasf.errors import InconclusiveTruncation, InvalidTorusElement, MalformedSpec, NotRegularSemisimple
from gasf.root_datum import build_root_datum
from gasf.series import LaurentSeries as L
from gasf.torus import (
    AbstractElement,
    ConcreteElement,
    ValuationProfile,
    c_gamma,
    discriminant_valuation,
    newton_point,
    parse_gamma,
    r_gamma,
    ultrametric_violations,
    valuation_profile,
)
from gasf.verify import gl2_ramified_fixture, sl3_ramified_fixture

from oracles import gl_discriminant, gl_eigenvalues

GL2 = build_root_datum("GL2")
SL3 = build_root_datum("SL3")


def concrete(d, mu, units):
    return ConcreteElement(d, d.coweight(mu), tuple(L.polynomial(u) for u in units))


def test_newton_point_examples():
    assert newton_point(concrete(GL2, [1, 0], [[1], [1]])) == GL2.coweight([1, 0])
    assert newton_point(concrete(GL2, [0, 1], [[3], [1, 1]])) == GL2.coweight([1, 0])
    _, g, _ = gl2_ramified_fixture()
    assert newton_point(g) == GL2.coweight(["1/2", "1/2"])


def test_profile_examples():
    g = concrete(GL2, [0, 0], [[1, 1], [1]])
    assert valuation_profile(g).values == (1,)
    g = concrete(GL2, [1, 0], [[1], [1]])
    assert valuation_profile(g).is_zero()
    g = parse_gamma(SL3, {"model": "concrete", "mu": [0, 0],
                          "root_values": [{"coeffs": [1, 1]}, {"coeffs": [1, 0, 1]}]})
    prof = valuation_profile(g)
    idx = {b: k for k, b in enumerate(SL3.positive_root_coeffs)}
    assert prof[idx[(1, 0)]] == 1 and prof[idx[(0, 1)]] == 2 and prof[idx[(1, 1)]] == 1
    assert ultrametric_violations(SL3, newton_point(g), prof.values) == []


def test_discriminant_examples():
    g = concrete(GL2, [1, 0], [[1], [1]])
    assert discriminant_valuation(g) == -1 and r_gamma(g) == 0
    for v in range(4):
        g = concrete(GL2, [0, 0], [[1] + [0] * (v - 1) + [1] if v else [2], [1]])
        assert discriminant_valuation(g) == 2 * v
        assert r_gamma(g) == v
    g = concrete(GL2, [0, 0], [[2], [1]])
    assert discriminant_valuation(g) == 0 and r_gamma(g) == 0


def test_c_gamma_examples():
    assert c_gamma(concrete(GL2, [1, 0], [[1], [1]])) == 0
    _, g, _ = gl2_ramified_fixture()
    assert c_gamma(g) == 1
    _, g, _ = sl3_ramified_fixture()
    assert c_gamma(g) == 2
    _, g, _ = sl3_ramified_fixture("s2s1")
    assert c_gamma(g) == 2


def test_ramified_fixture_values():
    _, g, _ = gl2_ramified_fixture()
    assert discriminant_valuation(g) == 0
    _, g, _ = sl3_ramified_fixture()
    assert (discriminant_valuation(g), r_gamma(g)) == (2, 1)


def test_non_regular_and_inconclusive():
    with pytest.raises(NotRegularSemisimple):
        valuation_profile(concrete(GL2, [0, 0], [[1, 1], [1, 1]]))
    close = ConcreteElement(GL2, GL2.coweight([0, 0]),
                            (L.polynomial([1] + [0] * 9 + [1], trunc=6), L.constant(1, 6)), 6)
    with pytest.raises(InconclusiveTruncation):
        valuation_profile(close)


def test_concrete_rejects_nonunits():
    with pytest.raises(InvalidTorusElement):
        concrete(GL2, [0, 0], [[0, 1], [1]])


def test_abstract_validation():
    s = GL2.parse_word("s1")
    half = GL2.coweight(["1/2", "1/2"])
    with pytest.raises(InvalidTorusElement):
        AbstractElement(GL2, 3, s, half, ValuationProfile((0,)))  # order of s is 2
    with pytest.raises(InvalidTorusElement):
        AbstractElement(GL2, 2, s, GL2.coweight(["1/3", "2/3"]), ValuationProfile((0,)))
    with pytest.raises(InvalidTorusElement):
        AbstractElement(GL2, 2, s, half, ValuationProfile((Fraction(1, 3),)))
    with pytest.raises(InvalidTorusElement):
        AbstractElement(GL2, 2, s, GL2.coweight([1, 0]), ValuationProfile((0,)))  # w(nu) != nu


def test_abstract_ultrametric_override():
    w = SL3.parse_word("s1s2")
    bad = ValuationProfile((Fraction(1, 3), Fraction(1, 3), Fraction(0)))
    with pytest.raises(InvalidTorusElement):
        AbstractElement(SL3, 3, w, SL3.zero(), bad)
    g = AbstractElement(SL3, 3, w, SL3.zero(), bad, override=True)
    assert not g.validated


def test_parse_gamma_errors():
    with pytest.raises(MalformedSpec):
        parse_gamma(GL2, {"model": "weird"})
    with pytest.raises(MalformedSpec):
        parse_gamma(GL2, {"model": "concrete", "mu": [0, 0]})
    with pytest.raises(MalformedSpec):
        parse_gamma(GL2, {"model": "abstract", "e": 2})
    with pytest.raises(MalformedSpec):
        parse_gamma(GL2, [1, 2])


# -- properties ---------------------------------------------------------------

unit = st.lists(st.integers(-3, 3), min_size=1, max_size=4).filter(lambda u: u[0] != 0)


@st.composite
def gl_concrete(draw, n_choices=(2, 3)):
    n = draw(st.sampled_from(n_choices))
    mu = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    units = draw(st.lists(unit, min_size=n, max_size=n))
    xs = gl_eigenvalues(mu, units)
    assume(all(xs[i] != xs[j] for i in range(n) for j in range(i)))
    d = build_root_datum(f"GL{n}")
    return d, mu, units, concrete(d, mu, units)


@given(gl_concrete())
def test_discriminant_matches_polynomial_oracle(case):
    d, mu, units, g = case
    assert discriminant_valuation(g) == gl_discriminant(gl_eigenvalues(mu, units))


@given(gl_concrete())
def test_newton_point_is_sorted_mu(case):
    d, mu, units, g = case
    nu = newton_point(g)
    assert list(nu) == sorted(mu, reverse=True) and d.is_dominant(nu)


@given(gl_concrete(), st.lists(unit, min_size=3, max_size=3))
def test_newton_point_ignores_units(case, other):
    d, mu, units, g = case
    xs = gl_eigenvalues(mu, other[: d.dim])
    assume(all(xs[i] != xs[j] for i in range(d.dim) for j in range(i)))
    assert newton_point(concrete(d, mu, other[: d.dim])) == newton_point(g)


@given(gl_concrete())
def test_r_identity_and_ultrametric(case):
    d, mu, units, g = case
    nu = newton_point(g)
    assert r_gamma(g) == discriminant_valuation(g) / 2 + d.pair(d.rho, nu)
    assert ultrametric_violations(d, nu, valuation_profile(g).values) == []
    assert c_gamma(g) == 0


@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.integers(0, 10_000))
def test_c_gamma_range(name, k):
    d = build_root_datum(name)
    w = d.weyl_group[k % len(d.weyl_group)]
    e = w.order()
    g = AbstractElement(d, e, w, d.zero(), ValuationProfile((Fraction(0),) * len(d.positive_roots)))
    c = c_gamma(g)
    assert 0 <= c <= d.rank and (c == 0) == w.is_identity
