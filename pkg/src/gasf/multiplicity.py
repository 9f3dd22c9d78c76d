"""Weight multiplicities m_{lambda mu} for the dual group.

Coweights of G are weights of the dual group, and the simple roots of G are
its simple coroots, so the Dynkin labels of a coweight c are simply
``<alpha_i, c>``.  Freudenthal's recursion works on labels; the Kostant
alternating sum works directly on lattice coordinates and shares no code
with it beyond the root datum.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import floor
from typing import Iterable, Sequence

from . import _linalg as la
from .errors import NotDominant, NotIntegral
from .root_datum import Coweight, RootDatum, _symmetrizer, positive_root_coefficients

Labels = tuple[int, ...]


class LabelSystem:
    """A finite root system presented through Dynkin labels.

    ``A[i][j]`` is the j-th label of the i-th simple root.  For the dual
    group of G this is G's Cartan matrix; for G itself it is the transpose.
    """

    def __init__(self, a):
        self.a = tuple(tuple(int(x) for x in row) for row in a)
        self.r = len(self.a)
        cart = la.transpose(self.a)  # <root_j, coroot_i> convention
        self.eps = _symmetrizer(cart) if self.r else ()
        self.ainv = la.inverse(self.a) if self.r else ()
        self.pos = tuple(positive_root_coefficients(cart)) if self.r else ()
        self.pos_labels = tuple(self.root_labels(b) for b in self.pos)
        self._memo: dict[Labels, dict] = {}

    def root_labels(self, coeffs: Sequence) -> tuple:
        return tuple(sum(coeffs[i] * self.a[i][j] for i in range(self.r)) for j in range(self.r))

    def coeffs(self, diff: Sequence) -> tuple[Fraction, ...]:
        """Solve ``diff = sum c_i root_i`` for c."""
        return tuple(sum(Fraction(diff[j]) * self.ainv[j][i] for j in range(self.r))
                     for i in range(self.r))

    def reflect(self, lab: Sequence, i: int) -> tuple:
        k = lab[i]
        return tuple(x - k * y for x, y in zip(lab, self.a[i]))

    def dominant(self, lab: Sequence) -> tuple:
        lab = tuple(lab)
        while True:
            i = next((k for k, x in enumerate(lab) if x < 0), None)
            if i is None:
                return lab
            lab = self.reflect(lab, i)

    def orbit(self, lab: Sequence) -> list[tuple]:
        lab = tuple(lab)
        seen = {lab}
        queue = deque([lab])
        while queue:
            x = queue.popleft()
            for i in range(self.r):
                y = self.reflect(x, i)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def _form(self, b: Sequence, lab: Sequence) -> Fraction:
        # (lab, sum b_i alpha_i) for the invariant form with (w_i, alpha_j) = delta_ij eps_j
        return sum((b[i] * self.eps[i] * lab[i] for i in range(self.r)), Fraction(0))

    def multiplicity(self, lam: Labels, mu: Sequence) -> int:
        """Freudenthal recursion; ``lam`` dominant, ``mu`` arbitrary labels."""
        mu = self.dominant(mu)
        c = self.coeffs(tuple(x - y for x, y in zip(lam, mu)))
        if any(x < 0 or x.denominator != 1 for x in c):
            return 0
        memo = self._memo.setdefault(tuple(lam), {})
        return self._mult(tuple(lam), mu, tuple(int(x) for x in c), memo)

    def _mult(self, lam, mu, c, memo) -> int:
        if not any(c):
            return 1
        if c in memo:
            return memo[c]
        denom = sum((c[i] * self.eps[i] * (lam[i] + mu[i] + 2) for i in range(self.r)), Fraction(0))
        total = Fraction(0)
        for b, bl in zip(self.pos, self.pos_labels):
            k = 1
            while True:
                ck = tuple(x - k * y for x, y in zip(c, b))
                if any(x < 0 for x in ck):
                    break
                nu = tuple(x + k * y for x, y in zip(mu, bl))
                dom = self.dominant(nu)
                cd = self.coeffs(tuple(x - y for x, y in zip(lam, dom)))
                if all(x >= 0 for x in cd):
                    m = self._mult(lam, dom, tuple(int(x) for x in cd), memo)
                    if m:
                        total += m * self._form(b, nu)
                k += 1
        val = 2 * total / denom
        assert val.denominator == 1 and val >= 0, f"non-integral multiplicity {val}"
        memo[c] = int(val)
        return int(val)

    def dominant_below(self, lam: Labels) -> list[tuple[Labels, tuple[int, ...]]]:
        """Dominant (labels, coeffs) with ``lam - sum c_i root_i`` dominant, c >= 0."""
        bound = self.coeffs(lam)
        ranges = [range(0, floor(x) + 1) for x in bound]
        out = []
        for c in product(*ranges):
            lab = tuple(lam[j] - sum(c[i] * self.a[i][j] for i in range(self.r)) for j in range(self.r))
            if all(x >= 0 for x in lab):
                out.append((lab, c))
        return out

    def weyl_dimension(self, lam: Labels) -> int:
        num = Fraction(1)
        for b in self.pos:
            num *= self._form(b, [x + 1 for x in lam]) / self._form(b, [1] * self.r)
        assert num.denominator == 1
        return int(num)

    def weight_system(self, lam: Labels) -> list[tuple[tuple, tuple[int, ...], int]]:
        """All weights of V(lam) as (labels, coeffs below lam, multiplicity)."""
        out = []
        for dom, _ in self.dominant_below(lam):
            m = self.multiplicity(lam, dom)
            if not m:
                continue
            for x in self.orbit(dom):
                c = self.coeffs(tuple(p - q for p, q in zip(lam, x)))
                out.append((x, tuple(int(v) for v in c), m))
        return out


@lru_cache(maxsize=None)
def _dual_system(cartan) -> LabelSystem:
    return LabelSystem(cartan)


@lru_cache(maxsize=None)
def _group_system(cartan) -> LabelSystem:
    return LabelSystem(la.transpose(cartan))


def dual_system(datum: RootDatum) -> LabelSystem:
    return _dual_system(datum.cartan)


def group_system(datum: RootDatum) -> LabelSystem:
    return _group_system(datum.cartan)


def _int_labels(datum: RootDatum, c: Coweight, what: str) -> Labels:
    lab = datum.labels(c)
    if any(x.denominator != 1 for x in lab):
        raise NotIntegral(f"{what} does not have integral labels")
    return tuple(int(x) for x in lab)


def _check_dominant(datum: RootDatum, lam: Coweight):
    if not datum.is_dominant(lam):
        raise NotDominant("lambda must be dominant")


def freudenthal(datum: RootDatum, lam: Coweight, mu: Coweight) -> int:
    """``m_{lambda mu}``: dimension of the mu weight space of V(lambda) for the dual group.

    lambda and mu need integral labels (weights of the simply connected
    cover of the dual group) and the same class modulo coroots.
    """
    _check_dominant(datum, lam)
    ll = _int_labels(datum, lam, "lambda")
    ml = _int_labels(datum, mu, "mu")
    if not datum.in_coroot_lattice(lam - mu):
        return 0
    if datum.rank == 0:
        return 1
    return dual_system(datum).multiplicity(ll, ml)


def kostant_partition(datum: RootDatum, beta: Coweight) -> int:
    """Ways to write beta as a non-negative integral sum of positive coroots."""
    if not datum.in_coroot_lattice(beta):
        return 0
    x = datum.coroot_coords(beta)
    return _partition(datum.positive_coroot_coeffs, tuple(int(v) for v in x))


@lru_cache(maxsize=None)
def _partition(coroots: tuple, x: tuple) -> int:
    return _partition_from(coroots, 0, x)


@lru_cache(maxsize=200_000)
def _partition_from(coroots: tuple, k: int, x: tuple) -> int:
    if any(v < 0 for v in x):
        return 0
    if not any(x):
        return 1
    if k == len(coroots):
        return 0
    gamma = coroots[k]
    total = 0
    cur = x
    while all(v >= 0 for v in cur):
        total += _partition_from(coroots, k + 1, cur)
        cur = tuple(a - b for a, b in zip(cur, gamma))
    return total


def kostant_mult(datum: RootDatum, lam: Coweight, mu: Coweight) -> int:
    """Kostant's alternating sum over W (independent oracle for freudenthal)."""
    _check_dominant(datum, lam)
    _int_labels(datum, lam, "lambda")
    _int_labels(datum, mu, "mu")
    if not datum.in_coroot_lattice(lam - mu):
        return 0
    rv = datum.rho_vee
    top = lam + rv
    base = mu + rv
    total = 0
    for w in datum.weyl_group:
        p = kostant_partition(datum, w.apply(top) - base)
        if p:
            total += -p if len(w.reduced_word) % 2 else p
    return total


def weyl_dimension(datum: RootDatum, lam: Coweight) -> int:
    _check_dominant(datum, lam)
    ll = _int_labels(datum, lam, "lambda")
    if datum.rank == 0:
        return 1
    return dual_system(datum).weyl_dimension(ll)


def orbit_size(datum: RootDatum, mu: Coweight) -> int:
    """``|W . mu|`` (computed on labels, which determine the orbit)."""
    if datum.rank == 0:
        return 1
    return len(dual_system(datum).orbit(tuple(datum.labels(mu))))


def dominant_weights_below(datum: RootDatum, lam: Coweight) -> list[Coweight]:
    """Dominant mu with lambda - mu a non-negative integral sum of simple coroots."""
    _check_dominant(datum, lam)
    ll = _int_labels(datum, lam, "lambda")
    if datum.rank == 0:
        return [lam]
    out = []
    for _, c in dual_system(datum).dominant_below(ll):
        out.append(lam - datum.from_coroot_coords(c))
    return out


def fundamental_box(datum: RootDatum, radius: int, start: int = 0) -> Iterable[Coweight]:
    """Coweights ``sum n_i w_i`` (fundamental coweights) with start <= n_i <= radius."""
    fc = datum.fundamental_coweights
    for n in product(range(start, radius + 1), repeat=datum.rank):
        c = datum.zero()
        for k, v in zip(n, fc):
            if k:
                c = c + k * v
        yield c
