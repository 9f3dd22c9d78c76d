"""Numerical invariants of generalized affine Springer fibers X_gamma^lambda.

Every count carries a provenance tag: THEOREM (proved for this input class),
CONJECTURAL (the predicted value) or COMPANION (a value whose proof in the
ramified case lives outside this package's source).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .coxeter import count_coxeter
from .errors import (
    CriteriaDisagree,
    EmptyFiber,
    InvalidTorusElement,
    MalformedSpec,
    NotZeroTwisted,
    RankTooLarge,
)
from .multiplicity import freudenthal, fundamental_box, kostant_mult
from .rational import fmt, fmt_vec
from .root_datum import Coweight, RootDatum
from .strata import (
    STEINBERG_MAX_RANK,
    _require_integral_dominant,
    leq_int,
    leq_Q,
    smallest_integral_approximation,
    steinberg_contains,
)
from .torus import (
    TorusElement,
    _d_direct,
    c_gamma,
    discriminant_valuation,
    fixed_dimension_by_trace,
    newton_point,
    r_gamma,
)

THEOREM = "THEOREM"
CONJECTURAL = "CONJECTURAL"
COMPANION = "COMPANION"
UNKNOWN = "UNKNOWN"


def is_nonempty(g: TorusElement, lam: Coweight, cross_check: bool = True) -> bool:
    """``nu_gamma <=_Q lam``, cross-checked against Steinberg membership when possible."""
    datum = g.datum
    _require_integral_dominant(datum, lam)
    by_newton = leq_Q(datum, newton_point(g), lam)
    if cross_check and g.is_concrete and datum.rank <= STEINBERG_MAX_RANK:
        by_steinberg = steinberg_contains(g, lam)
        if by_steinberg != by_newton:
            raise CriteriaDisagree(
                f"Newton-point test says {by_newton}, Steinberg test says {by_steinberg} "
                f"for lambda={fmt_vec(lam)}")
    return by_newton


def _require_nonempty(g: TorusElement, lam: Coweight):
    if not is_nonempty(g, lam):
        raise EmptyFiber(f"X is empty: the Newton point {fmt_vec(newton_point(g))} "
                         f"is not below lambda={fmt_vec(lam)}")


def _rho_pair(datum: RootDatum, c: Coweight) -> Fraction:
    return datum.pair(datum.rho, c)


def dimension_unramified(g: TorusElement, lam: Coweight) -> Fraction:
    """``<rho, lam> + d/2`` for a split element."""
    if not g.is_concrete:
        raise InvalidTorusElement("the unramified dimension formula needs a concrete (split) element")
    _require_nonempty(g, lam)
    datum = g.datum
    d = discriminant_valuation(g)
    dim = _rho_pair(datum, lam) + d / 2
    # MV-cycle count: <rho, lam + mu> - <2 rho, mu> + r(gamma), mu the Newton point
    mu = newton_point(g)
    mv = _rho_pair(datum, lam + mu) - 2 * _rho_pair(datum, mu) + r_gamma(g)
    assert mv == dim, f"dimension routes disagree: {dim} vs {mv}"
    return dim


def dimension_regular_locus(g: TorusElement, lam: Coweight) -> Fraction:
    """``<rho, lam> + (d - c)/2``."""
    _require_nonempty(g, lam)
    return _rho_pair(g.datum, lam) + (discriminant_valuation(g) - c_gamma(g)) / 2


def dimension_regular_locus_recomputed(g: TorusElement, lam: Coweight) -> Fraction:
    """Same value as :func:`dimension_regular_locus` by a second route.

    d comes from the root-by-root sum alone and c from the trace formula for
    the fixed space, bypassing the split form and the rank computation.
    """
    _require_nonempty(g, lam)
    d = _d_direct(g)
    c = g.datum.dim - fixed_dimension_by_trace(g.w_twist.matrix, g.e)
    return _rho_pair(g.datum, lam) + (d - c) / 2


def twisted_discriminant(g: TorusElement, lam: Coweight) -> Fraction:
    """``d_lam = <2 rho, lam> + d``, checked against its root-by-root form."""
    _require_nonempty(g, lam)
    datum = g.datum
    nu = newton_point(g)
    first = 2 * _rho_pair(datum, lam) + discriminant_valuation(g)
    second = Fraction(0)
    for k, a in enumerate(datum.positive_roots):
        if datum.pair(a, nu) == 0:
            second += 2 * g.profile[k]  # alpha and -alpha
    second += 2 * _rho_pair(datum, lam - nu)
    assert first == second, f"twisted discriminant routes disagree: {first} vs {second}"
    assert first >= 0, f"negative twisted discriminant {first}"
    return first


def zero_dim_report(g: TorusElement, lam: Coweight) -> dict:
    dl = twisted_discriminant(g, lam)
    if dl != 0:
        raise NotZeroTwisted(f"d_lambda = {fmt(dl)} is not zero")
    nu = newton_point(g)
    assert nu == lam and g.profile.is_zero(), "d_lambda = 0 must force nu = lambda and a zero profile"
    count = freudenthal(g.datum, lam, lam)
    assert count == 1
    out = {"dim": 0, "equals_regular_locus": True, "torsor": True, "count": count,
           "unramified": g.e == 1}
    if g.e != 1:
        out["warning"] = ("d_lambda = 0 forces an unramified element; this ramified "
                          "descriptor is not realizable")
    return out


def orbit_count(g: TorusElement, lam: Coweight) -> tuple[int, str]:
    """``m_{lam, mu*}`` with its provenance tag."""
    _require_nonempty(g, lam)
    datum = g.datum
    mu_star = smallest_integral_approximation(datum, newton_point(g))
    assert leq_int(datum, mu_star, lam)
    m = freudenthal(datum, lam, mu_star)
    tag = THEOREM if g.is_concrete or lam.is_zero() else CONJECTURAL
    return m, tag


def _bound_exact(datum: RootDatum, lam: Coweight, mu_star: Coweight) -> bool:
    return (all(x > 0 for x in datum.labels(lam))
            and all(x > 0 for x in datum.coroot_coords(lam - mu_star)))


def regular_orbit_bound(g: TorusElement, lam: Coweight) -> tuple[int, bool]:
    """Coxeter count, and whether the equality criterion applies."""
    _require_nonempty(g, lam)
    datum = g.datum
    mu_star = smallest_integral_approximation(datum, newton_point(g))
    return count_coxeter(datum), _bound_exact(datum, lam, mu_star)


# ---------------------------------------------------------------------------
# lower-bound scan


@dataclass
class LowerBoundScan:
    datum: str
    radius: int
    bound: int
    pairs: int = 0
    failed: list = field(default_factory=list)
    oracle_mismatch: list = field(default_factory=list)
    min_mult: int | None = None
    min_pair: tuple | None = None
    rows: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failed and not self.oracle_mismatch

    @property
    def minimum_attained(self) -> bool:
        return self.min_mult == self.bound

    def summary(self) -> dict:
        return {
            "datum": self.datum, "radius": self.radius, "bound": self.bound,
            "pairs": self.pairs, "failed": len(self.failed),
            "oracle_mismatch": len(self.oracle_mismatch),
            "min_multiplicity": self.min_mult,
            "min_pair": None if self.min_pair is None else [fmt_vec(v) for v in self.min_pair],
            "minimum_attained": self.minimum_attained, "passed": self.passed,
        }


def verify_lower_bound(datum: RootDatum, radius: int, oracle: bool = True) -> LowerBoundScan:
    """Check ``m_{lam mu} >= |Cox|`` on every pair in the equality regime.

    lam runs over ``sum n_i w_i`` (fundamental coweights) with 1 <= n_i <= radius;
    mu over dominant coweights with ``lam - mu`` a sum of simple coroots with
    all coefficients positive.
    """
    if datum.rank > 3:
        raise RankTooLarge("verify_lower_bound is limited to rank 3")
    if not 1 <= radius <= 5:
        raise MalformedSpec("radius must be between 1 and 5")
    from .multiplicity import dual_system

    t0 = time.perf_counter()
    bound = count_coxeter(datum)
    scan = LowerBoundScan(datum.name, radius, bound)
    sysd = dual_system(datum)
    for lam in fundamental_box(datum, radius, start=1):
        lab = tuple(int(x) for x in datum.labels(lam))
        for _, c in sysd.dominant_below(lab):
            if not all(x > 0 for x in c):
                continue
            mu = lam - datum.from_coroot_coords(c)
            m = freudenthal(datum, lam, mu)
            scan.pairs += 1
            ok = m >= bound
            row = (fmt_vec(datum.labels(lam)), fmt_vec(datum.labels(mu)), m, "ok" if ok else "FAILED")
            scan.rows.append(row)
            if not ok:
                scan.failed.append(row)
            if oracle:
                k = kostant_mult(datum, lam, mu)
                if k != m:
                    scan.oracle_mismatch.append((row, k))
            if scan.min_mult is None or m < scan.min_mult:
                scan.min_mult, scan.min_pair = m, (datum.labels(lam), datum.labels(mu))
    scan.seconds = time.perf_counter() - t0
    return scan


# ---------------------------------------------------------------------------
# full report


@dataclass
class FiberReport:
    nonempty: bool
    datum: str
    lam: Coweight
    newton: Coweight
    mu_star: Coweight | None = None
    d: Fraction | None = None
    r: Fraction | None = None
    c: int | None = None
    d_lambda: Fraction | None = None
    dim_regular: Fraction | None = None
    dim_total: Any = None
    dim_total_tag: str | None = None
    orbit_count: int | None = None
    orbit_count_tag: str | None = None
    regular_orbit_bound: int | None = None
    regular_bound_exact: bool | None = None
    zero_dimensional: bool | None = None
    certified: bool = True
    validated: bool = True
    warnings: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {
            "nonempty": self.nonempty,
            "datum": self.datum,
            "lambda": fmt_vec(self.lam),
            "newton": fmt_vec(self.newton),
            "certified": self.certified,
            "validated": self.validated,
            "warnings": list(self.warnings),
        }
        if not self.nonempty:
            return out
        out.update({
            "mu_star": fmt_vec(self.mu_star),
            "d": fmt(self.d),
            "r": fmt(self.r),
            "c": self.c,
            "d_lambda": fmt(self.d_lambda),
            "dim_regular": fmt(self.dim_regular),
            "dim_total": self.dim_total if self.dim_total == UNKNOWN else fmt(self.dim_total),
            "dim_total_tag": self.dim_total_tag,
            "orbit_count": self.orbit_count,
            "orbit_count_tag": self.orbit_count_tag,
            "regular_orbit_bound": self.regular_orbit_bound,
            "regular_bound_exact": self.regular_bound_exact,
            "zero_dimensional": self.zero_dimensional,
            "provenance": dict(self.provenance),
        })
        if self.dim_total == UNKNOWN:
            out["dim_total_companion"] = fmt(self.dim_regular)
        return out


def full_report(g: TorusElement, lam: Coweight) -> FiberReport:
    datum = g.datum
    _require_integral_dominant(datum, lam)
    nu = newton_point(g)
    validated = getattr(g, "validated", True)
    warnings = [] if validated else ["unvalidated input: profile fails the ultrametric check"]
    if not is_nonempty(g, lam):
        return FiberReport(False, datum.name, lam, nu, validated=validated, warnings=warnings)
    d = discriminant_valuation(g)
    c = c_gamma(g)
    dim_reg = dimension_regular_locus(g, lam)
    if g.is_concrete:
        dim_total, dim_tag = dimension_unramified(g, lam), THEOREM
        assert dim_total == dim_reg
    else:
        dim_total, dim_tag = UNKNOWN, COMPANION
    assert dim_reg == _rho_pair(datum, lam) + (d - c) / 2
    dl = twisted_discriminant(g, lam)
    zero_dim = dl == 0
    if zero_dim:
        z = zero_dim_report(g, lam)
        if "warning" in z:
            warnings.append(z["warning"])
    m, tag = orbit_count(g, lam)
    assert m >= 1
    bound, exact = regular_orbit_bound(g, lam)
    if exact:
        assert m >= bound, "orbit count below the Coxeter bound in the equality regime"
    if d.denominator != 1:
        warnings.append(f"d = {fmt(d)} is not an integer")
    if dim_reg.denominator != 1:
        warnings.append(f"dim_regular = {fmt(dim_reg)} is not an integer; the input is not realizable")
    provenance = {
        "dim_regular": "regular-locus dimension formula",
        "dim_total": ("unramified dimension formula; MV-cycle count" if g.is_concrete
                      else "companion work (equals dim_regular)"),
        "orbit_count": ("multiplicity of the smallest integral approximation"
                        + ("" if tag == THEOREM else " (predicted)")),
        "regular_orbit_bound": "Coxeter count",
    }
    return FiberReport(
        nonempty=True, datum=datum.name, lam=lam, newton=nu,
        mu_star=smallest_integral_approximation(datum, nu),
        d=d, r=r_gamma(g), c=c, d_lambda=dl, dim_regular=dim_reg,
        dim_total=dim_total, dim_total_tag=dim_tag,
        orbit_count=m, orbit_count_tag=tag,
        regular_orbit_bound=bound, regular_bound_exact=exact,
        zero_dimensional=zero_dim, certified=True, validated=validated,
        warnings=warnings, provenance=provenance,
    )
