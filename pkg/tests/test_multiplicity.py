from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gasf.errors import NotDominant, NotIntegral
from gasf.multiplicity import (
    dominant_weights_below,
    freudenthal,
    fundamental_box,
    kostant_mult,
    kostant_partition,
    orbit_size,
    weyl_dimension,
)
from gasf.root_datum import build_root_datum
from gasf.strata import leq_Q

from oracles import gl_dimension, gl_weight_multiplicity, partition_count, weyl_orbit_of_labels

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")
G2 = build_root_datum("G2")


def from_labels(d, labels):
    c = d.zero()
    for k, w in zip(labels, d.fundamental_coweights):
        c = c + k * w
    return c


def test_examples():
    assert freudenthal(A1, A1.coweight([1]), A1.zero()) == 1
    theta = A2.coweight([1, 1])
    assert freudenthal(A2, theta, A2.zero()) == 2
    assert kostant_mult(A2, theta, A2.zero()) == 2
    assert kostant_partition(A2, theta) == 2
    assert kostant_partition(A2, A2.zero()) == 1
    assert kostant_partition(A2, A2.coweight([1, -1])) == 0
    assert weyl_dimension(A2, theta) == 8
    assert weyl_dimension(A2, A2.zero()) == 1
    for lam in (theta, from_labels(A2, [3, 1])):
        assert freudenthal(A2, lam, lam) == kostant_mult(A2, lam, lam) == 1


def test_different_class_gives_zero():
    om1 = A2.fundamental_coweights[0]
    assert freudenthal(A2, om1, A2.zero()) == 0
    assert kostant_mult(A2, om1, A2.zero()) == 0


def test_g2_fundamental_dimensions():
    dims = sorted(weyl_dimension(G2, w) for w in G2.fundamental_coweights)
    assert dims == [7, 14]


def test_errors():
    with pytest.raises(NotDominant):
        freudenthal(A2, A2.coweight([1, -1]), A2.zero())
    with pytest.raises(NotIntegral):
        weyl_dimension(A2, from_labels(A2, ["1/2", 0]))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gl_multiplicities_are_kostka_numbers(n):
    d = build_root_datum(f"GL{n}")
    for lam in product(range(0, 4), repeat=n):
        if list(lam) != sorted(lam, reverse=True) or sum(lam) > 5:
            continue
        L = d.coweight(lam)
        assert weyl_dimension(d, L) == gl_dimension(lam)
        for mu in product(range(0, 4), repeat=n):
            if sum(mu) == sum(lam):
                assert freudenthal(d, L, d.coweight(mu)) == gl_weight_multiplicity(lam, mu), (lam, mu)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_partition_function_oracle(name):
    d = build_root_datum(name)
    vecs = d.positive_coroot_coeffs
    for x in product(range(0, 4), repeat=d.rank):
        assert kostant_partition(d, d.from_coroot_coords(x)) == partition_count(vecs, x)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_orbit_size_oracle(name):
    d = build_root_datum(name)
    for c in fundamental_box(d, 2):
        lab = [int(x) for x in d.labels(c)]
        assert orbit_size(d, c) == len(weyl_orbit_of_labels(d.cartan, lab))


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_positivity_iff_below(name):
    d = build_root_datum(name)
    for lam in fundamental_box(d, 2):
        for mu in fundamental_box(d, 3):
            m = freudenthal(d, lam, mu)
            assert (m > 0) == (d.in_coroot_lattice(lam - mu) and leq_Q(d, mu, lam))


# -- properties ---------------------------------------------------------------

@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.lists(st.integers(0, 3), min_size=3, max_size=3),
       st.data())
def test_weyl_invariance_and_dimension_sum(name, coeffs, data):
    d = build_root_datum(name)
    lam = from_labels(d, coeffs)
    below = dominant_weights_below(d, lam)
    mu = data.draw(st.sampled_from(below))
    w = data.draw(st.sampled_from(d.weyl_group))
    assert freudenthal(d, lam, w.apply(mu)) == freudenthal(d, lam, mu) == kostant_mult(d, lam, mu)
    assert sum(freudenthal(d, lam, m) * orbit_size(d, m) for m in below) == weyl_dimension(d, lam)
