"""Split root data with simply connected derived group.

A coweight lives in ``Lambda (x) Q`` and is stored by its coordinates in a
fixed Z-basis of the coweight lattice (the "lattice basis").  Weights are
stored by coordinates in the dual basis, so pairing is a dot product.  For
a named semisimple type the lattice basis is the basis of simple coroots;
for ``GLn`` it is the standard basis of Z^n.
"""

from __future__ import annotations

import json
import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from . import _linalg as la
from .errors import (
    DimensionMismatch,
    MalformedSpec,
    NonCartan,
    NotSimplyConnected,
    WeylGroupTooLarge,
)
from .rational import to_fraction

MAX_WEYL_ORDER = 2000


# ---------------------------------------------------------------------------
# vectors


@dataclass(frozen=True)
class _Vector:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(x) for x in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if len(other) != len(self):
            raise DimensionMismatch(f"{len(self)} vs {len(other)} coordinates")
        return None

    def __add__(self, other):
        bad = self._check(other)
        if bad is not None:
            return bad
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        bad = self._check(other)
        if bad is not None:
            return bad
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def __mul__(self, k):
        if isinstance(k, _Vector):
            return NotImplemented
        k = Fraction(k)
        return type(self)(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        from .rational import fmt

        return f"{type(self).__name__}({', '.join(fmt(a) for a in self.coords)})"


class Coweight(_Vector):
    """Rational coweight (element of Lambda (x) Q)."""


class Weight(_Vector):
    """Rational weight (element of the character lattice (x) Q)."""


def coweight(values: Iterable) -> Coweight:
    return Coweight(tuple(to_fraction(v) for v in values))


def weight(values: Iterable) -> Weight:
    return Weight(tuple(to_fraction(v) for v in values))


# ---------------------------------------------------------------------------
# Cartan matrices


def cartan_matrix(letter: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``C[i][j] = <alpha_j, alpha_i^vee>`` (Bourbaki numbering)."""
    letter = letter.upper()
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if not valid.get(letter, False):
        raise MalformedSpec(f"unknown Cartan type {letter}{n}")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif letter == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in c)


def _symmetrizer(c) -> tuple[Fraction, ...]:
    """Positive d with ``d_i C[i][j] == d_j C[j][i]``; smallest entry 1 per component.

    Raises NonCartan when C is not symmetrizable.
    """
    r = len(c)
    d: list[Fraction | None] = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(r):
                if j == i or c[i][j] == 0:
                    continue
                if c[j][i] == 0:
                    raise NonCartan("C[i][j] = 0 must imply C[j][i] = 0")
                val = d[i] * c[i][j] / c[j][i]
                if d[j] is None:
                    d[j] = val
                    comp.append(j)
                    queue.append(j)
                elif d[j] != val:
                    raise NonCartan("Cartan matrix is not symmetrizable")
        m = min(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / m
    return tuple(d)


def check_cartan(c) -> tuple[Fraction, ...]:
    """Validate a finite-type Cartan matrix and return its symmetrizer."""
    r = len(c)
    if any(len(row) != r for row in c):
        raise NonCartan("Cartan matrix must be square")
    for i in range(r):
        if c[i][i] != 2:
            raise NonCartan("diagonal entries must be 2")
        for j in range(r):
            if i != j and (c[i][j] > 0 or int(c[i][j]) != c[i][j]):
                raise NonCartan("off-diagonal entries must be non-positive integers")
    d = _symmetrizer(c)
    sym = [[d[i] * c[i][j] for j in range(r)] for i in range(r)]
    for k in range(1, r + 1):
        if la.det([row[:k] for row in sym[:k]]) <= 0:
            raise NonCartan("Cartan matrix is not of finite type")
    return d


def _components(c) -> list[tuple[int, ...]]:
    r = len(c)
    seen = [False] * r
    out = []
    for s in range(r):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if not seen[j] and c[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def positive_root_coefficients(c) -> list[tuple[int, ...]]:
    """Positive roots as coefficient vectors in the simple roots.

    Ordered by height, then lexicographically (descending) within a height,
    so the first r entries are the simple roots in order.
    """
    r = len(c)
    simple = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    found = set(simple)
    layers = [simple]
    while layers[-1]:
        nxt = set()
        for beta in layers[-1]:
            for i in range(r):
                # <beta, alpha_i^vee>
                pairing = sum(beta[j] * c[i][j] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= found
        found |= nxt
        layers.append(sorted(nxt, reverse=True))
    return [beta for layer in layers for beta in layer]


# ---------------------------------------------------------------------------
# Weyl group elements


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element acting on coweight lattice coordinates."""

    reduced_word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    datum: "RootDatum" = field(compare=False, hash=False, repr=False)

    def apply(self, c: Coweight) -> Coweight:
        return Coweight(la.matvec(self.matrix, c.coords))

    def apply_weight(self, phi: Weight) -> Weight:
        # contragredient: <w phi, w c> = <phi, c>
        return Weight(la.vecmat(phi.coords, self.inverse().matrix))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.datum.weyl_from_matrix(la.matmul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        word = tuple(reversed(self.reduced_word))
        return self.datum.weyl_element(word)

    @property
    def is_identity(self) -> bool:
        return self.matrix == la.identity(len(self.matrix))

    def length(self) -> int:
        """Number of positive coroots sent to negative coroots."""
        dat = self.datum
        return sum(1 for b in dat.positive_coroots if dat.is_negative_coroot(self.apply(b)))

    def order(self) -> int:
        ident = la.identity(len(self.matrix))
        m = self.matrix
        k = 1
        while m != ident:
            m = la.matmul(m, self.matrix)
            k += 1
        return k

    def word_string(self) -> str:
        """1-based word such as ``s1s2``; ``e`` for the identity."""
        if not self.reduced_word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.reduced_word)


# ---------------------------------------------------------------------------
# the root datum


class RootDatum:
    """A split root datum whose derived group is simply connected.

    ``coroots`` are the simple coroots as integer vectors of the coweight
    lattice; ``roots`` are the simple roots as integer vectors of the dual
    lattice.  Construction checks the Cartan axioms, the pairing, and that
    the coroot lattice is saturated in the coweight lattice.
    """

    def __init__(self, cartan, coroots, roots, name: str = "custom",
                 simple_factors: Sequence[str] | None = None):
        self.name = name
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        r = len(self.cartan)
        self.rank = r
        self._d = check_cartan(self.cartan) if r else ()
        self.simple_coroots = tuple(Coweight(tuple(v)) for v in coroots)
        self.simple_roots = tuple(Weight(tuple(v)) for v in roots)
        if len(self.simple_coroots) != r or len(self.simple_roots) != r:
            raise MalformedSpec("need one simple root and one simple coroot per Cartan row")
        n = len(self.simple_coroots[0]) if r else None
        if n is None:
            raise MalformedSpec("use central_rank for a torus")
        self.dim = n
        for v in self.simple_coroots + self.simple_roots:
            if len(v) != n:
                raise DimensionMismatch("all simple (co)roots need the same length")
            if not v.is_integral:
                raise MalformedSpec("simple (co)roots must be integral")
        for i in range(r):
            for j in range(r):
                if self.pair(self.simple_roots[j], self.simple_coroots[i]) != self.cartan[i][j]:
                    raise MalformedSpec("simple roots and coroots do not realise the Cartan matrix")
        u = la.unimodular_complement([[int(x) for x in v] for v in self.simple_coroots])
        if u is None:
            raise NotSimplyConnected(
                "the coroot lattice is not saturated in the coweight lattice; "
                "the derived group would not be simply connected")
        self._u = u
        self.central_rank = n - r
        self._det_rows = u[r:]
        # characters extending the fundamental weights of the derived group
        self.fundamental_weights = tuple(Weight(tuple(row)) for row in u[:r])
        self._cinv = la.inverse(self.cartan)
        self._simple_factors = tuple(simple_factors) if simple_factors else None

    # -- classification ----------------------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the Dynkin diagram (simple factors)."""
        return tuple(_components(self.cartan))

    @property
    def semisimple_rank(self) -> int:
        return self.rank

    # -- roots ---------------------------------------------------------------

    @cached_property
    def positive_root_coeffs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(positive_root_coefficients(self.cartan))

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        out = []
        for beta in self.positive_root_coeffs:
            v = [Fraction(0)] * self.dim
            for j, b in enumerate(beta):
                if b:
                    for k in range(self.dim):
                        v[k] += b * self.simple_roots[j][k]
            out.append(Weight(tuple(v)))
        return tuple(out)

    @cached_property
    def positive_coroot_coeffs(self) -> tuple[tuple[int, ...], ...]:
        """Coroot of each positive root, in simple-coroot coordinates."""
        d, c, r = self._d, self.cartan, self.rank
        out = []
        for beta in self.positive_root_coeffs:
            half_norm = sum(beta[i] * beta[j] * d[i] * c[i][j]
                            for i in range(r) for j in range(r)) / 2
            cv = tuple(beta[i] * d[i] / half_norm for i in range(r))
            assert all(x.denominator == 1 for x in cv)
            out.append(tuple(int(x) for x in cv))
        return tuple(out)

    @cached_property
    def positive_coroots(self) -> tuple[Coweight, ...]:
        return tuple(self.from_coroot_coords(cv) for cv in self.positive_coroot_coeffs)

    @cached_property
    def rho(self) -> Weight:
        return Fraction(1, 2) * sum(self.positive_roots, Weight((0,) * self.dim))

    @cached_property
    def rho_vee(self) -> Coweight:
        return Fraction(1, 2) * sum(self.positive_coroots, Coweight((0,) * self.dim))

    @cached_property
    def fundamental_coweights(self) -> tuple[Coweight, ...]:
        """Coweights in the coroot span with ``<alpha_i, w_j> = delta_ij``."""
        return tuple(self.from_coroot_coords(self._cinv[j]) for j in range(self.rank))

    @property
    def coweight_lattice_basis(self) -> tuple[Coweight, ...]:
        return tuple(Coweight(row) for row in la.identity(self.dim))

    @property
    def coroot_lattice_basis(self) -> tuple[Coweight, ...]:
        return self.simple_coroots

    # -- coordinates -------------------------------------------------------

    def coweight(self, values) -> Coweight:
        c = coweight(values)
        if len(c) != self.dim:
            raise DimensionMismatch(f"{self.name} coweights have {self.dim} coordinates, got {len(c)}")
        return c

    def zero(self) -> Coweight:
        return Coweight((0,) * self.dim)

    def pair(self, phi: Weight, c: Coweight) -> Fraction:
        """The pairing <phi, c>."""
        if not isinstance(phi, Weight) or not isinstance(c, Coweight):
            raise DimensionMismatch("pair expects (Weight, Coweight)")
        if len(phi) != len(c):
            raise DimensionMismatch(f"{len(phi)} vs {len(c)} coordinates")
        return sum((a * b for a, b in zip(phi.coords, c.coords)), Fraction(0))

    def labels(self, c: Coweight) -> tuple[Fraction, ...]:
        """``(<alpha_1, c>, ..., <alpha_r, c>)``."""
        return tuple(self.pair(a, c) for a in self.simple_roots)

    def coroot_coords(self, c: Coweight) -> tuple[Fraction, ...]:
        """Coefficients of the projection of c to the coroot span.

        The complement used is the centre (common kernel of the roots), so
        ``<omega_i, c - sum x_j alpha_j^vee> = 0`` on the derived part.
        """
        lab = self.labels(c)
        r = self.rank
        return tuple(sum(lab[j] * self._cinv[j][i] for j in range(r)) for i in range(r))

    def det(self, c: Coweight) -> tuple[Fraction, ...]:
        """Image of c in ``(Lambda / Lambda_0) (x) Q`` (coordinates in a Z-basis)."""
        return tuple(sum(a * b for a, b in zip(row, c.coords)) for row in self._det_rows)

    def from_coroot_coords(self, x) -> Coweight:
        v = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi:
                for k in range(self.dim):
                    v[k] += xi * self.simple_coroots[i][k]
        return Coweight(tuple(v))

    def in_coroot_span(self, c: Coweight) -> bool:
        return not any(self.det(c))

    def in_coroot_lattice(self, c: Coweight) -> bool:
        return self.in_coroot_span(c) and all(x.denominator == 1 for x in self.coroot_coords(c))

    def is_dominant(self, c: Coweight) -> bool:
        return all(x >= 0 for x in self.labels(c))

    def is_integral(self, c: Coweight) -> bool:
        return c.is_integral

    def is_negative_coroot(self, c: Coweight) -> bool:
        return all(x <= 0 for x in self.coroot_coords(c))

    # -- Weyl group ----------------------------------------------------------

    @cached_property
    def _reflection_matrices(self):
        n = self.dim
        out = []
        for a, av in zip(self.simple_roots, self.simple_coroots):
            out.append(tuple(tuple(int((1 if i == j else 0) - av[i] * a[j]) for j in range(n))
                             for i in range(n)))
        return tuple(out)

    def reflect(self, c: Coweight, i: int) -> Coweight:
        k = self.pair(self.simple_roots[i], c)
        return c - k * self.simple_coroots[i]

    def weyl_element(self, word: Sequence[int]) -> WeylElement:
        """Element given by a (not necessarily reduced) 0-based word."""
        m = la.identity(self.dim)
        for i in word:
            if not 0 <= i < self.rank:
                raise MalformedSpec(f"no simple reflection s{i + 1} in {self.name}")
            m = la.matmul(m, self._reflection_matrices[i])
        return self.weyl_from_matrix(m)

    def weyl_from_matrix(self, m) -> WeylElement:
        """Wrap a matrix, computing a reduced word by peeling right descents."""
        m = tuple(tuple(int(x) for x in row) for row in m)
        word = []
        cur = m
        for _ in range(len(self.positive_coroots) + 1):
            for i in range(self.rank):
                if self.is_negative_coroot(Coweight(la.matvec(cur, self.simple_coroots[i].coords))):
                    word.append(i)
                    cur = la.matmul(cur, self._reflection_matrices[i])
                    break
            else:
                break
        if cur != la.identity(self.dim):
            raise MalformedSpec("matrix is not a Weyl group element")
        return WeylElement(tuple(reversed(word)), m, self)

    def identity(self) -> WeylElement:
        return WeylElement((), la.identity(self.dim), self)

    def parse_word(self, text: str) -> WeylElement:
        """Parse ``"s1s2"``, ``"s1 s2"``, ``"1,2"`` or ``"e"`` (1-based)."""
        t = text.strip().lower()
        if t in ("", "e", "1", "id", "identity"):
            return self.identity()
        if "s" in t:
            idx = re.findall(r"s\s*(\d+)", t)
            if not idx or re.sub(r"[s\d\s*,.]", "", t):
                raise MalformedSpec(f"bad Weyl word {text!r}")
        else:
            idx = re.findall(r"\d+", t)
        return self.weyl_element([int(i) - 1 for i in idx])

    @cached_property
    def weyl_group(self) -> tuple[WeylElement, ...]:
        """All elements, by breadth-first closure; identity first, sorted by length."""
        ident = la.identity(self.dim)
        seen = {ident: ()}
        order = [ident]
        queue = deque([ident])
        while queue:
            m = queue.popleft()
            for i, s in enumerate(self._reflection_matrices):
                nm = la.matmul(m, s)
                if nm not in seen:
                    seen[nm] = seen[m] + (i,)
                    order.append(nm)
                    queue.append(nm)
                    if len(order) > MAX_WEYL_ORDER:
                        raise WeylGroupTooLarge(
                            f"|W({self.name})| exceeds {MAX_WEYL_ORDER}; enumeration refused")
        return tuple(WeylElement(seen[m], m, self) for m in order)

    @cached_property
    def w0(self) -> WeylElement:
        """Longest element: the image of -rho_vee's chamber."""
        # w0 maps the dominant chamber to the antidominant one; sorting
        # -rho_vee to the dominant chamber yields w0 without enumerating W.
        _, w = self.dominant_representative(-self.rho_vee)
        return w

    def dominant_representative(self, c: Coweight) -> tuple[Coweight, WeylElement]:
        """Dominant element of W.c and one w with ``w(c)`` dominant."""
        word = []
        cur = c
        while True:
            lab = self.labels(cur)
            i = next((k for k, x in enumerate(lab) if x < 0), None)
            if i is None:
                break
            cur = cur - lab[i] * self.simple_coroots[i]
            word.append(i)
        w = self.weyl_element(tuple(reversed(word)))
        return cur, w

    def apply_minus_w0(self, c: Coweight) -> Coweight:
        return -self.w0.apply(c)

    # -- misc ------------------------------------------------------------------

    def simple_factors(self) -> tuple[str, ...]:
        if self._simple_factors is not None:
            return self._simple_factors
        return tuple(f"rank{len(comp)}" for comp in self.components)

    def positive_root_index(self, beta: Sequence[int]) -> int:
        return self.positive_root_coeffs.index(tuple(beta))

    def summary(self) -> dict:
        from .rational import fmt_vec

        return {
            "name": self.name,
            "semisimple_rank": self.rank,
            "central_rank": self.central_rank,
            "cartan": [list(row) for row in self.cartan],
            "simple_coroots": [fmt_vec(v) for v in self.simple_coroots],
            "simple_roots": [fmt_vec(v) for v in self.simple_roots],
            "positive_roots": [
                {"index": k, "coeffs": list(b), "weight": fmt_vec(a)}
                for k, (b, a) in enumerate(zip(self.positive_root_coeffs, self.positive_roots))
            ],
            "rho": fmt_vec(self.rho),
            "fundamental_weights": [fmt_vec(v) for v in self.fundamental_weights],
            "fundamental_coweights": [fmt_vec(v) for v in self.fundamental_coweights],
        }

    def __repr__(self):
        return f"RootDatum({self.name!r})"


# ---------------------------------------------------------------------------
# construction


_FACTOR = re.compile(r"^(GL|SL|[A-GT])(\d+)$", re.IGNORECASE)


def _factor_blocks(tok: str):
    """(cartan, coroots, roots, label) for one factor of a product spec."""
    m = _FACTOR.match(tok)
    if not m:
        raise MalformedSpec(f"cannot parse datum factor {tok!r}")
    head, n = m.group(1).upper(), int(m.group(2))
    if head == "GL":
        if n < 1:
            raise MalformedSpec("GL0 is not a group")
        r = n - 1
        c = cartan_matrix("A", r) if r else ()
        cor = [tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n)) for i in range(r)]
        return c, cor, list(cor), n, f"GL{n}", ([f"A{r}"] if r else [])
    if head == "T":
        return (), [], [], n, f"T{n}", []
    if head == "SL":
        if n < 2:
            raise MalformedSpec("SL1 is trivial")
        head, n = "A", n - 1
    c = cartan_matrix(head, n)
    cor = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = [tuple(c[k][j] for k in range(n)) for j in range(n)]
    return c, cor, roots, n, f"{head}{n}", [f"{head}{n}"]


def _assemble(blocks, name):
    total_r = sum(len(b[0]) for b in blocks)
    total_n = sum(b[3] for b in blocks)
    cartan = [[0] * total_r for _ in range(total_r)]
    coroots, roots, factors = [], [], []
    ro = no = 0
    for c, cor, rts, n, _, fac in blocks:
        r = len(c)
        for i in range(r):
            for j in range(r):
                cartan[ro + i][ro + j] = c[i][j]
        for v in cor:
            coroots.append((0,) * no + tuple(v) + (0,) * (total_n - no - n))
        for v in rts:
            roots.append((0,) * no + tuple(v) + (0,) * (total_n - no - n))
        factors.extend(fac)
        ro += r
        no += n
    if total_r == 0:
        return TorusDatum(total_n, name)
    return RootDatum(cartan, coroots, roots, name=name, simple_factors=factors)


def _from_record(rec: dict, name: str) -> RootDatum:
    if not isinstance(rec, dict) or "cartan" not in rec:
        raise MalformedSpec("explicit datum needs a 'cartan' entry")
    try:
        cartan = [[int(x) for x in row] for row in rec["cartan"]]
    except (TypeError, ValueError):
        raise MalformedSpec("cartan must be a matrix of integers") from None
    r = len(cartan)
    k = int(rec.get("central_rank", 0))
    if k < 0:
        raise MalformedSpec("central_rank must be non-negative")
    if "coroots" in rec or "roots" in rec:
        try:
            coroots = [tuple(int(x) for x in v) for v in rec["coroots"]]
            roots = [tuple(int(x) for x in v) for v in rec["roots"]]
        except (KeyError, TypeError, ValueError):
            raise MalformedSpec("'coroots' and 'roots' must both be integer matrices") from None
        if r == 0:
            return TorusDatum(len(coroots[0]) if coroots else k, name)
        return RootDatum(cartan, coroots, roots, name=name)
    if r == 0:
        return TorusDatum(k, name)
    check_cartan(cartan)
    n = r + k
    coroots = [tuple(1 if j == i else 0 for j in range(n)) for i in range(r)]
    roots = [tuple(cartan[i][j] for i in range(r)) + (0,) * k for j in range(r)]
    return RootDatum(cartan, coroots, roots, name=name)


def build_root_datum(spec) -> RootDatum:
    """Build a datum from ``"A2"``, ``"B3*A1"``, ``"GL3"``, a JSON file path,
    a JSON string, or an already-parsed dict."""
    if isinstance(spec, RootDatum):
        return spec
    if isinstance(spec, dict):
        return _from_record(spec, spec.get("name", "custom"))
    if not isinstance(spec, str) or not spec.strip():
        raise MalformedSpec(f"bad datum specification {spec!r}")
    text = spec.strip()
    if text.startswith("{"):
        try:
            rec = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedSpec(f"bad JSON datum: {e}") from None
        return _from_record(rec, rec.get("name", "custom"))
    if text.endswith(".json") or os.path.sep in text:
        try:
            with open(text, encoding="utf-8") as fh:
                rec = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise MalformedSpec(f"cannot read datum file {text}: {e}") from None
        return _from_record(rec, rec.get("name", os.path.basename(text)))
    toks = [t.strip() for t in re.split(r"[*x×]", text) if t.strip()]
    if not toks:
        raise MalformedSpec(f"bad datum specification {spec!r}")
    blocks = [_factor_blocks(t) for t in toks]
    return _assemble(blocks, "*".join(b[4] for b in blocks))


class TorusDatum(RootDatum):
    """Root datum of a split torus (no roots)."""

    def __init__(self, n: int, name: str):
        if n < 1:
            raise MalformedSpec("a torus needs positive rank")
        self.name = name
        self.cartan = ()
        self.rank = 0
        self._d = ()
        self.simple_coroots = ()
        self.simple_roots = ()
        self.dim = n
        self._u = la.identity(n)
        self.central_rank = n
        self._det_rows = self._u
        self.fundamental_weights = ()
        self._cinv = ()
        self._simple_factors = ()

    @cached_property
    def w0(self) -> WeylElement:
        return self.identity()


def box(n: int, radius: int) -> Iterable[tuple[int, ...]]:
    """Integer points of ``[-radius, radius]^n``."""
    return product(range(-radius, radius + 1), repeat=n)
