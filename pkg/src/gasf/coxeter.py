"""Coxeter elements: products of all simple reflections, each exactly once."""

from __future__ import annotations

from itertools import permutations

from . import _linalg as la
from .errors import WeylGroupTooLarge
from .root_datum import RootDatum, WeylElement

MAX_RANK = 8


def enumerate_coxeter(datum: RootDatum) -> list[WeylElement]:
    """Distinct Coxeter elements, found by multiplying out every ordering of S."""
    r = datum.rank
    if r > MAX_RANK:
        raise WeylGroupTooLarge(f"rank {r} exceeds the Coxeter enumeration cap {MAX_RANK}")
    refl = datum._reflection_matrices
    found: dict = {}
    for order in permutations(range(r)):
        m = la.identity(datum.dim)
        for i in order:
            m = la.matmul(m, refl[i])
        found.setdefault(m, order)
    out = []
    for m, order in sorted(found.items(), key=lambda kv: kv[1]):
        w = WeylElement(tuple(order), m, datum)
        assert w.length() == r and set(order) == set(range(r))
        out.append(w)
    return out


def count_coxeter(datum: RootDatum) -> int:
    """``prod 2^(r_i - 1)`` over the simple factors."""
    out = 1
    for comp in datum.components:
        out *= 2 ** (len(comp) - 1)
    return out


def coxeter_number(datum: RootDatum) -> int:
    """Number of roots divided by the rank, for an irreducible datum."""
    return 2 * len(datum.positive_roots) // datum.rank


def are_conjugate(datum: RootDatum, a: WeylElement, b: WeylElement) -> bool:
    for w in datum.weyl_group:
        if la.matmul(w.matrix, a.matrix) == la.matmul(b.matrix, w.matrix):
            return True
    return False
