from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gasf.errors import DimensionMismatch, MalformedSpec, NonCartan, NotSimplyConnected, WeylGroupTooLarge
from gasf.root_datum import build_root_datum, cartan_matrix, coweight, weight

from oracles import POSITIVE_ROOT_COUNT, WEYL_ORDER, weyl_order

NAMED = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"]


def test_a1():
    d = build_root_datum("A1")
    assert d.rank == 1 and len(d.positive_roots) == 1 and len(d.weyl_group) == 2


def test_a2_rho_is_sum_of_fundamental_weights():
    d = build_root_datum("A2")
    assert len(d.positive_roots) == 3
    assert d.rho == d.fundamental_weights[0] + d.fundamental_weights[1]


def test_gl2_has_free_rank_one_quotient():
    d = build_root_datum("GL2")
    assert (d.rank, d.central_rank, d.dim) == (1, 1, 2)
    assert d.det(d.coweight([1, 0])) == (1,)
    assert d.in_coroot_lattice(d.coweight([1, -1]))
    assert not d.in_coroot_lattice(d.coweight([1, 0]))


@pytest.mark.parametrize("name", NAMED)
def test_positive_root_count(name):
    assert len(build_root_datum(name).positive_roots) == POSITIVE_ROOT_COUNT[name]


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"])
def test_weyl_order(name):
    d = build_root_datum(name)
    assert len(d.weyl_group) == WEYL_ORDER[name] == weyl_order(d.cartan)


@pytest.mark.parametrize("name", NAMED + ["GL3", "A1*B2"])
def test_pairing_identities(name):
    d = build_root_datum(name)
    r = d.rank
    for i in range(r):
        assert d.pair(d.rho, d.simple_coroots[i]) == 1
        for j in range(r):
            assert d.pair(d.simple_roots[i], d.simple_coroots[j]) == d.cartan[j][i]
            assert d.pair(d.fundamental_weights[i], d.simple_coroots[j]) == (i == j)
            assert d.pair(d.simple_roots[i], d.fundamental_coweights[j]) == (i == j)


@pytest.mark.parametrize("name", ["A2", "B3", "G2", "F4"])
def test_positive_roots_closed_under_simple_reflections(name):
    d = build_root_datum(name)
    pos = set(d.positive_root_coeffs)
    for b in pos:
        for i in range(d.rank):
            k = sum(b[j] * d.cartan[i][j] for j in range(d.rank))  # <beta, alpha_i^vee>
            img = tuple(x - (k if j == i else 0) for j, x in enumerate(b))
            simple = tuple(int(j == i) for j in range(d.rank))
            assert img in pos or b == simple


def test_pair_examples():
    d = build_root_datum("A2")
    a1v = d.simple_coroots[0]
    theta = d.simple_coroots[0] + d.simple_coroots[1]
    assert d.pair(d.simple_roots[0], a1v) == 2
    assert d.pair(d.rho, theta) == 2


def test_dominant_representative_examples():
    gl2 = build_root_datum("GL2")
    rep, w = gl2.dominant_representative(gl2.coweight([0, 1]))
    assert rep == gl2.coweight([1, 0]) and w.reduced_word == (0,)
    a2 = build_root_datum("A2")
    theta = a2.coweight([1, 1])
    rep, w = a2.dominant_representative(-theta)
    assert rep == theta and w.apply(-theta) == theta
    rep, w = a2.dominant_representative(theta)
    assert rep == theta and w.is_identity


def test_minus_w0():
    a2 = build_root_datum("A2")
    om1, om2 = a2.fundamental_coweights
    assert a2.apply_minus_w0(om1) == om2
    assert a2.apply_minus_w0(a2.zero()) == a2.zero()
    b2 = build_root_datum("B2")
    assert b2.w0.matrix == tuple(tuple(-int(i == j) for j in range(2)) for i in range(2))
    c = b2.coweight([2, 3])
    assert b2.apply_minus_w0(c) == c


def test_weyl_element_length_counts_inversions():
    d = build_root_datum("B3")
    for w in d.weyl_group[:40]:
        neg = 0
        for a in d.positive_coroots:
            img = w.apply(a)
            neg += all(x <= 0 for x in d.coroot_coords(img))
        assert neg == w.length() == len(w.reduced_word)


def test_weyl_element_matrix_is_product_of_reflections():
    d = build_root_datum("A3")
    w = d.parse_word("s1s2s3")
    c = d.coweight([1, 0, 0])
    manual = c
    for i in reversed((0, 1, 2)):
        manual = d.reflect(manual, i)
    assert w.apply(c) == manual
    assert w.word_string() == "s1s2s3" and d.parse_word("1,2,3").matrix == w.matrix
    assert d.parse_word("e").is_identity


def test_products_and_aliases():
    d = build_root_datum("A1*B2")
    assert d.rank == 3 and len(d.components) == 2
    assert build_root_datum("SL3").cartan == build_root_datum("A2").cartan
    assert build_root_datum("T2").dim == 2


def test_explicit_datum_from_dict_and_json(tmp_path):
    rec = {"cartan": [[2, -1], [-1, 2]], "central_rank": 1}
    d = build_root_datum(rec)
    assert d.dim == 3 and d.central_rank == 1
    p = tmp_path / "d.json"
    p.write_text('{"cartan": [[2, -3], [-1, 2]]}')
    assert len(build_root_datum(str(p)).positive_roots) == 6


def test_rejections():
    with pytest.raises(MalformedSpec):
        build_root_datum("Q3")
    with pytest.raises(MalformedSpec):
        cartan_matrix("E", 9)
    with pytest.raises(NonCartan):
        build_root_datum({"cartan": [[2, -2], [-2, 2]]})  # affine
    with pytest.raises(NonCartan):
        build_root_datum({"cartan": [[2, 0], [-1, 2]]})
    with pytest.raises(NotSimplyConnected):
        build_root_datum({"cartan": [[2]], "coroots": [[2]], "roots": [[1]]})  # PGL2
    with pytest.raises(DimensionMismatch):
        build_root_datum("A2").coweight([1, 2, 3])


def test_weyl_group_cap():
    with pytest.raises(WeylGroupTooLarge):
        build_root_datum("E8").weyl_group


def test_vector_helpers():
    c = coweight([1, "1/2"])
    assert c.coords == (1, Fraction(1, 2)) and not c.is_integral
    assert (c + c).is_integral and (c - c).is_zero()
    assert type(weight([1, 2])).__name__ == "Weight"


# -- properties ---------------------------------------------------------------

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.lists(small, min_size=3, max_size=3),
       st.integers(0, 10_000))
def test_dominant_representative_is_w_invariant(name, vals, k):
    d = build_root_datum(name)
    c = d.coweight(vals[: d.dim])
    rep, w = d.dominant_representative(c)
    assert d.is_dominant(rep) and w.apply(c) == rep
    assert d.dominant_representative(rep)[0] == rep
    u = d.weyl_group[k % len(d.weyl_group)]
    assert d.dominant_representative(u.apply(c))[0] == rep


@given(st.sampled_from(["A2", "A3", "B3", "G2", "D4"]), st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_minus_w0_involution_on_dominant(name, labels):
    d = build_root_datum(name)
    c = d.zero()
    for k, v in zip(labels, d.fundamental_coweights):
        c = c + k * v
    img = d.apply_minus_w0(c)
    assert d.is_dominant(img) and d.apply_minus_w0(img) == c
