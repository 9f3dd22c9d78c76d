"""Regular semisimple torus elements and their numerical invariants.

A concrete element is ``pi^mu * t0`` with ``t0`` a point of T(O) given by one
unit series per lattice coordinate; a character with weight coordinates
``(a_1, ..., a_n)`` evaluates to ``pi^<a, mu> * prod u_k^a_k``.  Ramified
elements are abstract descriptors (e, w, nu, profile) whose consistency is
checked but not derived.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping

from . import _linalg as la
from .errors import (
    InconclusiveTruncation,
    InvalidTorusElement,
    MalformedSpec,
    NotRegularSemisimple,
)
from .rational import fmt, fmt_vec, to_fraction
from .root_datum import Coweight, RootDatum, Weight, WeylElement
from .series import INCONCLUSIVE, INFINITE, LaurentSeries, default_truncation, invert, unit_power


@dataclass(frozen=True)
class ValuationProfile:
    """``v_beta = val(beta(gamma) - 1)`` indexed by positive-root index.

    Roots are taken in the frame where the Newton point is dominant.
    """

    values: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, v in enumerate(self.values) if v)

    def is_zero(self) -> bool:
        return not any(self.values)

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def to_json(self) -> dict:
        return {str(k): fmt(v) for k, v in enumerate(self.values) if v}


def ultrametric_violations(datum: RootDatum, nu: Coweight, values) -> list[tuple[int, int, int]]:
    """Triples (a, b, a+b) of indices where ``v_{a+b} < min(v_a, v_b)``.

    Only roots orthogonal to nu take part (that is the support domain).
    """
    coeffs = datum.positive_root_coeffs
    index = {c: k for k, c in enumerate(coeffs)}
    domain = [k for k, a in enumerate(datum.positive_roots) if datum.pair(a, nu) == 0]
    bad = []
    for i, a in enumerate(domain):
        for b in domain[i + 1:]:
            s = tuple(x + y for x, y in zip(coeffs[a], coeffs[b]))
            k = index.get(s)
            if k is not None and k in domain and values[k] < min(values[a], values[b]):
                bad.append((a, b, k))
    return bad


class TorusElement:
    datum: RootDatum
    is_concrete: bool


# ---------------------------------------------------------------------------
# concrete (split) elements


@dataclass(frozen=True, eq=False)
class ConcreteElement(TorusElement):
    datum: RootDatum
    mu: Coweight
    units: tuple[LaurentSeries, ...]
    trunc: int = field(default_factory=default_truncation)

    is_concrete = True

    def __post_init__(self):
        if len(self.mu) != self.datum.dim or len(self.units) != self.datum.dim:
            raise InvalidTorusElement(
                f"{self.datum.name} needs {self.datum.dim} coordinates for mu and for the units")
        if not self.mu.is_integral:
            raise InvalidTorusElement("mu must be integral for a split element")
        for u in self.units:
            if u.valuation() is INCONCLUSIVE or u.valuation() is INFINITE or u.lead != 0:
                raise InvalidTorusElement(f"unit coordinate {u} does not have certified valuation 0")

    @property
    def e(self) -> int:
        return 1

    @property
    def w_twist(self) -> WeylElement:
        return self.datum.identity()

    def unit_value(self, phi: Weight) -> LaurentSeries:
        """``phi(t0)`` as a series (inverts units for negative exponents)."""
        memo = self.__dict__.setdefault("_unit_values", {})
        if phi in memo:
            return memo[phi]
        out = LaurentSeries.constant(1)
        for a, u in zip(phi.coords, self.units):
            if a:
                p = u ** int(a) if a > 0 else invert(u, self.trunc) ** int(-a)
                out = out * p
        memo[phi] = out.truncate(self.trunc) if not out.is_exact else out
        return memo[phi]

    def character_value(self, phi: Weight) -> LaurentSeries:
        """``phi(gamma)``."""
        return self.unit_value(phi).shift(int(self.datum.pair(phi, self.mu)))

    def _val_minus_one(self, phi: Weight):
        """``val(phi(t0) - 1)`` without inverting: clear the negative exponents first."""
        num = LaurentSeries.constant(1)
        den = LaurentSeries.constant(1)
        for a, u in zip(phi.coords, self.units):
            if a > 0:
                num = num * u ** int(a)
            elif a < 0:
                den = den * u ** int(-a)
        diff = num - den
        if not diff.is_exact:
            diff = diff.truncate(self.trunc)
        return diff.valuation()

    @cached_property
    def _frame(self) -> tuple[Coweight, WeylElement]:
        return self.datum.dominant_representative(self.mu)

    @cached_property
    def profile(self) -> ValuationProfile:
        nu, w = self._frame
        vals = []
        for beta in self.datum.positive_roots:
            if self.datum.pair(beta, nu) > 0:
                vals.append(Fraction(0))
                continue
            # beta in the dominant frame is the character beta o w on gamma
            alpha = Weight(la.vecmat(beta.coords, w.matrix))
            v = self._val_minus_one(alpha)
            if v is INFINITE:
                raise NotRegularSemisimple(
                    f"root {fmt_vec(alpha)} takes the value 1 exactly; gamma is not regular")
            if v is INCONCLUSIVE:
                raise InconclusiveTruncation(
                    f"val(alpha(gamma) - 1) >= {self.trunc} for root {fmt_vec(alpha)}; "
                    "raise the truncation order")
            vals.append(Fraction(v))
        return ValuationProfile(tuple(vals))

    def to_json(self) -> dict:
        return {"model": "concrete", "mu": fmt_vec(self.mu),
                "units": [u.to_json() for u in self.units]}


# ---------------------------------------------------------------------------
# abstract (possibly ramified) elements


@dataclass(frozen=True, eq=False)
class AbstractElement(TorusElement):
    datum: RootDatum
    e: int
    w_twist: WeylElement
    nu: Coweight
    profile: ValuationProfile
    override: bool = False

    is_concrete = False

    def __post_init__(self):
        d = self.datum
        if self.e < 1:
            raise InvalidTorusElement("ramification degree e must be positive")
        if len(self.nu) != d.dim:
            raise InvalidTorusElement(f"nu needs {d.dim} coordinates")
        if len(self.profile.values) != len(d.positive_roots):
            raise InvalidTorusElement("profile length must equal the number of positive roots")
        if self.w_twist.order() != self.e:
            raise InvalidTorusElement(
                f"twist {self.w_twist.word_string()} has order {self.w_twist.order()}, not e={self.e}")
        if not (self.e * self.nu).is_integral:
            raise InvalidTorusElement("e * nu must be integral")
        if not d.is_dominant(self.nu):
            raise InvalidTorusElement("nu must be dominant")
        if self.w_twist.apply(self.nu) != self.nu:
            raise InvalidTorusElement("the Newton point must be fixed by the twist")
        for k, v in enumerate(self.profile.values):
            if v < 0 or self.e % v.denominator:
                raise InvalidTorusElement(
                    f"profile value {fmt(v)} must be non-negative with denominator dividing e")
            if v and d.pair(d.positive_roots[k], self.nu) != 0:
                raise InvalidTorusElement(
                    f"profile is supported on root {k}, which pairs nontrivially with nu")
        if not self.override and ultrametric_violations(d, self.nu, self.profile.values):
            raise InvalidTorusElement(
                "profile violates the ultrametric inequality (set override to accept anyway)")

    @property
    def validated(self) -> bool:
        return not self.override or not ultrametric_violations(self.datum, self.nu, self.profile.values)

    def to_json(self) -> dict:
        out = {"model": "abstract", "e": self.e, "w": self.w_twist.word_string(),
               "nu": fmt_vec(self.nu), "profile": self.profile.to_json()}
        if self.override:
            out["override"] = True
        return out


# ---------------------------------------------------------------------------
# invariants


def newton_point(g: TorusElement) -> Coweight:
    if g.is_concrete:
        return g._frame[0]
    return g.nu


def valuation_profile(g: TorusElement) -> ValuationProfile:
    return g.profile


def _d_direct(g: TorusElement) -> Fraction:
    """Sum over all of Phi of ``val(1 - alpha(gamma))``.

    Concrete elements evaluate each root as a series (with inversion);
    abstract elements use the split form with their stored profile.
    """
    d = g.datum
    if "_d_direct" in g.__dict__:
        return g.__dict__["_d_direct"]
    if g.is_concrete:
        total = Fraction(0)
        for a in d.positive_roots:
            for phi in (a, -a):
                v = (1 - g.character_value(phi)).valuation()
                if v is INFINITE:
                    raise NotRegularSemisimple(f"root {fmt_vec(phi)} takes the value 1 exactly")
                if v is INCONCLUSIVE:
                    raise InconclusiveTruncation(
                        f"val(1 - alpha(gamma)) not certified for root {fmt_vec(phi)} "
                        f"at truncation {g.trunc}")
                total += v
        g.__dict__["_d_direct"] = total
        return total
    nu, prof = newton_point(g), g.profile
    total = Fraction(0)
    for k, a in enumerate(d.positive_roots):
        for phi in (a, -a):
            p = d.pair(phi, nu)
            total += prof[k] if p == 0 else min(p, 0)
    return total


def _d_split(g: TorusElement) -> Fraction:
    """``2 sum_{Phi+} v_alpha - <2 rho, nu>``."""
    d = g.datum
    return 2 * g.profile.total() - 2 * d.pair(d.rho, newton_point(g))


def discriminant_valuation(g: TorusElement) -> Fraction:
    direct = _d_direct(g)
    split = _d_split(g)
    assert direct == split, f"discriminant paths disagree: {direct} vs {split}"
    return split


def r_gamma(g: TorusElement) -> Fraction:
    r = g.profile.total()
    other = discriminant_valuation(g) / 2 + g.datum.pair(g.datum.rho, newton_point(g))
    assert r == other, f"r(gamma) mismatch: {r} vs {other}"
    return r


def c_gamma(g: TorusElement) -> int:
    """Codimension of the fixed space of the twist on the coweight space."""
    m = g.w_twist.matrix
    n = len(m)
    diff = tuple(tuple(m[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n))
    c = la.rank(diff)
    assert n - c == fixed_dimension_by_trace(m, g.e)
    return c


def fixed_dimension_by_trace(m, e: int) -> int:
    """``dim Fix(m) = (1/e) sum_k tr(m^k)`` for m of order dividing e."""
    n = len(m)
    p = la.identity(n)
    total = 0
    for _ in range(e):
        total += sum(p[i][i] for i in range(n))
        p = la.matmul(p, m)
    assert total % e == 0
    return total // e


# ---------------------------------------------------------------------------
# parsing


def concrete_from_root_values(datum: RootDatum, mu, values, trunc: int | None = None) -> ConcreteElement:
    """Concrete element whose simple roots take the given unit values on t0.

    Only for data without central torus.  Values need constant term 1 when a
    fractional power is required.
    """
    if datum.central_rank:
        raise MalformedSpec("root_values needs a datum without central torus")
    trunc = trunc if trunc is not None else default_truncation()
    rmat = tuple(tuple(a.coords) for a in datum.simple_roots)
    rinv = la.inverse(rmat)
    units = []
    for k in range(datum.dim):
        u = LaurentSeries.constant(1)
        for j, v in enumerate(values):
            q = rinv[k][j]
            if q:
                u = u * unit_power(v, q, trunc)
        units.append(u.truncate(trunc) if not u.is_exact else u)
    return ConcreteElement(datum, datum.coweight(mu), tuple(units), trunc)


def parse_gamma(datum: RootDatum, obj: Mapping, trunc: int | None = None) -> TorusElement:
    """Build an element from its JSON description."""
    if not isinstance(obj, Mapping):
        raise MalformedSpec("gamma must be a JSON object")
    model = obj.get("model")
    trunc = trunc if trunc is not None else default_truncation()
    if model == "concrete":
        mu = datum.coweight(obj.get("mu", [0] * datum.dim))
        if "root_values" in obj:
            vals = [LaurentSeries.from_json(s) for s in obj["root_values"]]
            if len(vals) != datum.rank:
                raise InvalidTorusElement(f"need {datum.rank} root values")
            return concrete_from_root_values(datum, mu, vals, trunc)
        if "units" not in obj:
            raise MalformedSpec("concrete gamma needs 'units' or 'root_values'")
        units = tuple(LaurentSeries.from_json(s) for s in obj["units"])
        return ConcreteElement(datum, mu, units, trunc)
    if model == "abstract":
        try:
            e = int(obj["e"])
            nu = datum.coweight(obj["nu"])
        except KeyError as k:
            raise MalformedSpec(f"abstract gamma needs {k}") from None
        w = obj.get("w", "e")
        twist = datum.parse_word(w) if isinstance(w, str) else datum.weyl_element([i - 1 for i in w])
        raw = obj.get("profile", {})
        vals = [Fraction(0)] * len(datum.positive_roots)
        if isinstance(raw, Mapping):
            for key, v in raw.items():
                try:
                    k = int(key)
                except ValueError:
                    raise MalformedSpec(f"profile keys are positive-root indices, got {key!r}") from None
                if not 0 <= k < len(vals):
                    raise InvalidTorusElement(f"no positive root with index {k}")
                vals[k] = to_fraction(v)
        else:
            if len(raw) != len(vals):
                raise InvalidTorusElement("profile list must have one entry per positive root")
            vals = [to_fraction(v) for v in raw]
        return AbstractElement(datum, e, twist, nu, ValuationProfile(tuple(vals)),
                               bool(obj.get("override", False)))
    raise MalformedSpec("gamma 'model' must be 'concrete' or 'abstract'")
