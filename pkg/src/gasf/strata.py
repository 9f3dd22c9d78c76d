"""Dominance orders, dominant polytopes and their strata, Steinberg-stratum
membership, and dominance for enhanced coweights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import ceil, floor

from . import _linalg as la
from .errors import (
    AbelianizationMismatch,
    DetClassMismatch,
    InconclusiveTruncation,
    InvalidTorusElement,
    NoIntegralDominator,
    NotDominant,
    NotIntegral,
    RankTooLarge,
)
from .rational import fmt_vec
from .root_datum import Coweight, RootDatum, Weight
from .series import INCONCLUSIVE, INFINITE, LaurentSeries
from .torus import ConcreteElement, TorusElement

STEINBERG_MAX_RANK = 3


# ---------------------------------------------------------------------------
# dominance orders


def leq_Q(datum: RootDatum, nu: Coweight, lam: Coweight) -> bool:
    """``lam - nu`` is a non-negative rational combination of simple coroots."""
    diff = lam - nu
    if not datum.in_coroot_span(diff):
        return False
    return all(x >= 0 for x in datum.coroot_coords(diff))


def leq_int(datum: RootDatum, mu: Coweight, lam: Coweight) -> bool:
    """``lam - mu`` is a non-negative integral combination of simple coroots."""
    if not (mu.is_integral and lam.is_integral):
        raise NotIntegral("leq_int needs integral coweights")
    diff = lam - mu
    return datum.in_coroot_lattice(diff) and all(x >= 0 for x in datum.coroot_coords(diff))


def _require_integral_dominant(datum: RootDatum, lam: Coweight, what: str = "lambda"):
    if not lam.is_integral:
        raise NotIntegral(f"{what} must be integral")
    if not datum.is_dominant(lam):
        raise NotDominant(f"{what} must be dominant")


def meet(datum: RootDatum, lam1: Coweight, lam2: Coweight) -> Coweight:
    """Largest dominant mu below both (the polytopes intersect in P_mu)."""
    _require_integral_dominant(datum, lam1, "lambda1")
    _require_integral_dominant(datum, lam2, "lambda2")
    diff = lam1 - lam2
    if not datum.in_coroot_lattice(diff):
        raise DetClassMismatch("lambda1 - lambda2 is not in the coroot lattice")
    x = datum.coroot_coords(diff)
    beta1 = datum.from_coroot_coords([max(v, 0) for v in x])
    mu = lam1 - beta1
    assert datum.is_dominant(mu), "meet left the dominant cone"
    assert leq_int(datum, mu, lam1) and leq_int(datum, mu, lam2)
    return mu


def dominant_below(datum: RootDatum, lam: Coweight) -> list[Coweight]:
    """All dominant integral mu with mu <= lam."""
    _require_integral_dominant(datum, lam)
    cache = datum.__dict__.setdefault("_dominant_below", {})
    if lam in cache:
        return list(cache[lam])
    x = datum.coroot_coords(lam)
    lab = datum.labels(lam)
    c = datum.cartan
    r = datum.rank
    out = []
    for n in product(*(range(0, floor(v) + 1) for v in x)):
        # labels of alpha_i^vee form row i of the Cartan matrix
        if all(lab[j] - sum(n[i] * c[i][j] for i in range(r)) >= 0 for j in range(r)):
            out.append(lam - datum.from_coroot_coords(n))
    cache[lam] = tuple(out)
    return out


# ---------------------------------------------------------------------------
# integral approximation


def _integral_lift(datum: RootDatum, nu: Coweight) -> Coweight:
    """An integral coweight with the same image in the abelianization as nu."""
    dv = datum.det(nu)
    if any(v.denominator != 1 for v in dv):
        raise NoIntegralDominator(
            f"central component {fmt_vec(dv)} of nu is not integral; no integral coweight dominates it")
    target = (0,) * datum.rank + tuple(dv)
    return Coweight(la.solve(datum._u, target))


def _ceiling_point(datum: RootDatum, nu: Coweight) -> tuple[Coweight, tuple[int, ...]]:
    lam0 = _integral_lift(datum, nu)
    q = datum.coroot_coords(nu - lam0)
    n = tuple(ceil(v) for v in q)
    return lam0 + datum.from_coroot_coords(n), n


def approximation_by_climbing(datum: RootDatum, nu: Coweight) -> tuple[Coweight, list[Coweight]]:
    """Climb from the ceiling point by simple coroots until dominant.

    Every step stays below the answer (a negative label forces that simple
    coroot into the difference), so the end point is the minimum.  Returns
    the answer and the chain of visited points.
    """
    mu, _ = _ceiling_point(datum, nu)
    chain = [mu]
    while True:
        lab = datum.labels(mu)
        i = next((k for k, v in enumerate(lab) if v < 0), None)
        if i is None:
            return mu, chain
        mu = mu + datum.simple_coroots[i]
        chain.append(mu)


def smallest_integral_approximation(datum: RootDatum, nu: Coweight) -> Coweight:
    """The unique minimal dominant integral mu with ``nu <=_Q mu``.

    Enumerates the dominant candidates in a box above the ceiling point,
    keeps the minimal ones, folds them with :func:`meet` and asserts a
    single survivor.
    """
    if not datum.is_dominant(nu):
        raise NotDominant("nu must be dominant")
    mu_c, n0 = _ceiling_point(datum, nu)
    # mu_c + t * 2rho_vee is dominant for t large, and bounds the answer from above
    lab = datum.labels(mu_c)
    t = max([0] + [ceil(-v / 2) for v in lab])
    two_rho = datum.coroot_coords(2 * datum.rho_vee)
    cands = []
    for extra in product(*(range(0, int(t * b) + 1) for b in two_rho)):
        mu = mu_c + datum.from_coroot_coords(extra)
        if datum.is_dominant(mu):
            cands.append(mu)
    assert cands, "no dominant candidate in the search box"
    minimal = [m for m in cands
               if not any(o != m and leq_int(datum, o, m) for o in cands)]
    folded = reduce(lambda a, b: meet(datum, a, b), minimal)
    assert all(m == folded for m in minimal), "minimal dominators are not unique"
    assert leq_Q(datum, nu, folded)
    return folded


def in_polytope(datum: RootDatum, lam: Coweight, nu: Coweight) -> bool:
    """nu lies in ``P_lam``: dominant and ``nu <=_Q lam``."""
    _require_integral_dominant(datum, lam)
    return datum.is_dominant(nu) and leq_Q(datum, nu, lam)


def in_polytope_halfspaces(datum: RootDatum, lam: Coweight, nu: Coweight) -> bool:
    """Same set as :func:`in_polytope`, by its inequality description."""
    diff = lam - nu
    if any(datum.det(diff)):
        return False
    return (all(datum.pair(a, nu) >= 0 for a in datum.simple_roots)
            and all(datum.pair(w, diff) >= 0 for w in datum.fundamental_weights))


def in_stratum(datum: RootDatum, lam: Coweight, nu: Coweight) -> bool:
    """nu lies in ``P_lam`` minus every ``P_mu`` with mu < lam."""
    if not in_polytope(datum, lam, nu):
        return False
    return not any(mu != lam and in_polytope(datum, mu, nu) for mu in dominant_below(datum, lam))


def strata_query(datum: RootDatum, nu: Coweight) -> dict:
    lam = smallest_integral_approximation(datum, nu)
    climbed, chain = approximation_by_climbing(datum, nu)
    assert climbed == lam
    return {"nu": fmt_vec(nu), "stratum": fmt_vec(lam), "witness_chain": [fmt_vec(c) for c in chain]}


# ---------------------------------------------------------------------------
# Steinberg strata


def _weight_systems(datum: RootDatum) -> list[list[tuple[Weight, int]]]:
    """Weights (with multiplicity) of the fundamental representations of G."""
    from .multiplicity import group_system

    cache = datum.__dict__.setdefault("_fund_weight_systems", None)
    if cache is not None:
        return cache
    sysg = group_system(datum)
    out = []
    for i, om in enumerate(datum.fundamental_weights):
        lab = tuple(1 if j == i else 0 for j in range(datum.rank))
        ws = []
        for _, c, m in sysg.weight_system(lab):
            phi = om
            for j, cj in enumerate(c):
                if cj:
                    phi = phi - cj * datum.simple_roots[j]
            ws.append((phi, m))
        out.append(ws)
    datum.__dict__["_fund_weight_systems"] = out
    return out


def trace_valuation(g: ConcreteElement, i: int):
    """``val Tr rho_{omega_i}(gamma)`` (or INCONCLUSIVE with a lower bound)."""
    cache = g.__dict__.setdefault("_trace_vals", {})
    if i in cache:
        return cache[i]
    tr = LaurentSeries.zero()
    for phi, m in _weight_systems(g.datum)[i]:
        tr = tr + m * g.character_value(phi)
    v = tr.valuation()
    if v is INCONCLUSIVE:
        res = (INCONCLUSIVE, tr.trunc)
    elif v is INFINITE:
        res = (INFINITE, None)
    else:
        res = (v, None)
    cache[i] = res
    return res


def steinberg_contains(g: TorusElement, lam: Coweight) -> bool:
    """chi(gamma) lies in the Steinberg stratum of lam.

    Tested by ``val Tr rho_{omega_i}(gamma) >= <omega_i, w0 lam>`` for all i
    together with ``det(gamma) in det(pi^lam) G_ab(O)``.
    """
    datum = g.datum
    if not g.is_concrete:
        raise InvalidTorusElement("Steinberg membership needs a concrete element")
    if datum.rank > STEINBERG_MAX_RANK:
        raise RankTooLarge(f"Steinberg membership is limited to semisimple rank {STEINBERG_MAX_RANK}")
    _require_integral_dominant(datum, lam)
    if datum.det(g.mu) != datum.det(lam):
        return False
    w0lam = datum.w0.apply(lam)
    for i, om in enumerate(datum.fundamental_weights):
        bound = datum.pair(om, w0lam)
        v, known = trace_valuation(g, i)
        if v is INFINITE:
            continue
        if v is INCONCLUSIVE:
            if known >= bound:
                continue
            raise InconclusiveTruncation(
                f"trace of fundamental representation {i + 1} vanishes to order {known}, "
                f"cannot compare with {bound}")
        if v < bound:
            return False
    return True


def steinberg_stratum_contains(g: TorusElement, lam: Coweight) -> bool:
    """chi(gamma) in the open stratum: in C_<=lam and in no C_<=mu with mu < lam."""
    if not steinberg_contains(g, lam):
        return False
    return not any(mu != lam and steinberg_contains(g, mu) for mu in dominant_below(g.datum, lam))


# ---------------------------------------------------------------------------
# enhanced coweights


@dataclass(frozen=True)
class EnhancedCoweight:
    """A pair of coweights of the adjoint torus of the derived group.

    Both components are stored as coweights in the coroot span of the
    datum (integral labels).  ``nu1`` is the abelianization component.
    """

    nu1: Coweight
    nu2: Coweight

    def check(self, datum: RootDatum) -> "EnhancedCoweight":
        for v in (self.nu1, self.nu2):
            if not datum.in_coroot_span(v) or any(x.denominator != 1 for x in datum.labels(v)):
                raise NotIntegral("enhanced components must be adjoint coweights")
        if not datum.in_coroot_lattice(self.nu1 + self.nu2):
            raise NotIntegral("nu1 + nu2 must lie in the coroot lattice")
        return self

    def to_json(self, datum: RootDatum) -> dict:
        return {"nu1": fmt_vec(datum.labels(self.nu1)), "nu2": fmt_vec(datum.labels(self.nu2))}


def adjoint_image(datum: RootDatum, lam: Coweight) -> Coweight:
    """Projection of lam to the coroot span (the same labels)."""
    return datum.from_coroot_coords(datum.coroot_coords(lam))


def enhanced_from_labels(datum: RootDatum, l1, l2) -> EnhancedCoweight:
    def c(lab):
        return datum.from_coroot_coords(
            [sum(Fraction(lab[j]) * datum._cinv[j][i] for j in range(datum.rank))
             for i in range(datum.rank)])
    return EnhancedCoweight(c(l1), c(l2)).check(datum)


def lambda_plus(datum: RootDatum, lam: Coweight) -> EnhancedCoweight:
    """``(-w0(lam_bar), w0(lam_bar))``."""
    _require_integral_dominant(datum, lam)
    bar = adjoint_image(datum, lam)
    w0bar = datum.w0.apply(bar)
    return EnhancedCoweight(-w0bar, w0bar).check(datum)


def enhanced_leq(datum: RootDatum, mu_plus: EnhancedCoweight, lam_plus: EnhancedCoweight) -> bool:
    """Dominance of enhanced coweights through the fundamental pairings.

    The second components are moved to the dominant chamber first.
    """
    if mu_plus.nu1 != lam_plus.nu1:
        raise AbelianizationMismatch("enhanced coweights have different abelianization components")
    m2, _ = datum.dominant_representative(mu_plus.nu2)
    l2, _ = datum.dominant_representative(lam_plus.nu2)
    w0 = datum.w0
    # <w0 omega_i, c> = <omega_i, w0 c> since w0 is an involution
    pairing = all(datum.pair(om, w0.apply(m2)) >= datum.pair(om, w0.apply(l2))
                  for om in datum.fundamental_weights)
    direct = enhanced_leq_direct(datum, m2, l2)
    assert pairing == direct, "enhanced dominance tests disagree"
    return pairing


def enhanced_leq_direct(datum: RootDatum, mu2: Coweight, lam2: Coweight) -> bool:
    """``lam2 - mu2`` is a non-negative integral sum of simple coroots (linear solve)."""
    diff = lam2 - mu2
    if datum.rank == 0:
        return diff.is_zero()
    # the coroots are independent, so the augmented system has pivots 0..r-1
    mat = la.transpose([tuple(v.coords) for v in datum.simple_coroots])
    full, piv = la._echelon([list(row) + [diff[k]] for k, row in enumerate(mat)])
    if datum.rank in piv:
        return False
    x = [full[k][datum.rank] for k in range(datum.rank)]
    return all(v >= 0 and v.denominator == 1 for v in x)
