"""Truncated formal Laurent series in the uniformizer with rational coefficients."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import MalformedSpec, NotInvertible
from .rational import fmt, to_fraction

DEFAULT_TRUNCATION = 16


def default_truncation() -> int:
    """Working truncation order; the ``SPRINGER_TRUNCATION`` variable overrides it."""
    raw = os.environ.get("SPRINGER_TRUNCATION")
    if raw is None or raw.strip() == "":
        return DEFAULT_TRUNCATION
    try:
        n = int(raw)
    except ValueError:
        raise MalformedSpec(f"SPRINGER_TRUNCATION must be an integer, got {raw!r}") from None
    if n < 1:
        raise MalformedSpec("SPRINGER_TRUNCATION must be positive")
    return n


class _Sentinel:
    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name

    def __bool__(self):
        return False


#: valuation of a series whose known coefficients all vanish
INCONCLUSIVE = _Sentinel("INCONCLUSIVE")
#: valuation of the exact zero series
INFINITE = _Sentinel("INFINITE")


@dataclass(frozen=True)
class LaurentSeries:
    """``sum_k coeffs[k] * pi^(lead + k) + O(pi^trunc)``.

    ``trunc`` is None for an exact finite expression (a Laurent polynomial).
    Instances are kept canonical: no leading zero coefficient, no
    coefficients at or beyond ``trunc``, no trailing zeros.  A truncated
    zero has ``lead == trunc``; the exact zero has ``lead == 0``.
    """

    lead: int
    coeffs: tuple[Fraction, ...]
    trunc: int | None = None

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        lead = int(self.lead)
        if self.trunc is not None:
            c = c[: max(0, self.trunc - lead)]
        while c and c[-1] == 0:
            c.pop()
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        c = c[k:]
        lead += k
        if not c:
            lead = 0 if self.trunc is None else self.trunc
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "lead", lead)

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c, trunc: int | None = None) -> "LaurentSeries":
        return cls(0, (to_fraction(c) if not isinstance(c, Fraction) else c,), trunc)

    @classmethod
    def monomial(cls, k: int, c=1, trunc: int | None = None) -> "LaurentSeries":
        return cls(k, (Fraction(c),), trunc)

    @classmethod
    def polynomial(cls, coeffs: Sequence, lead: int = 0, trunc: int | None = None) -> "LaurentSeries":
        return cls(lead, tuple(Fraction(c) for c in coeffs), trunc)

    @classmethod
    def zero(cls, trunc: int | None = None) -> "LaurentSeries":
        return cls(0, (), trunc)

    # -- inspection --------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    @property
    def is_exact_zero(self) -> bool:
        return self.trunc is None and not self.coeffs

    def valuation(self):
        """Lowest exponent with a nonzero coefficient, INFINITE, or INCONCLUSIVE."""
        if self.coeffs:
            return self.lead
        return INFINITE if self.trunc is None else INCONCLUSIVE

    def coefficient(self, k: int) -> Fraction:
        if self.trunc is not None and k >= self.trunc:
            raise ValueError(f"coefficient of pi^{k} is beyond the truncation order")
        i = k - self.lead
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _vlow(self):
        # lower bound for the valuation (exact zero counts as +infinity)
        return None if self.is_exact_zero else self.lead

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        trunc = _min_opt(self.trunc, other.trunc)
        if self.is_exact_zero:
            return other.truncate(trunc) if trunc is not None else other
        if other.is_exact_zero:
            return self
        lo = min(self.lead, other.lead)
        hi = max(self.lead + len(self.coeffs), other.lead + len(other.coeffs))
        if trunc is not None:
            hi = min(hi, trunc)
        out = []
        for k in range(lo, max(lo, hi)):
            out.append(self._get(k) + other._get(k))
        return LaurentSeries(lo, tuple(out), trunc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.lead, tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        out = LaurentSeries.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _get(self, k: int) -> Fraction:
        i = k - self.lead
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by ``pi^k``."""
        return LaurentSeries(self.lead + k, self.coeffs,
                             None if self.trunc is None else self.trunc + k)

    def truncate(self, n: int) -> "LaurentSeries":
        return LaurentSeries(self.lead, self.coeffs, _min_opt(self.trunc, n))

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """True if the two series agree on every mutually known coefficient."""
        n = _min_opt(self.trunc, other.trunc)
        lo = min(self.lead, other.lead)
        hi = max(self.lead + len(self.coeffs), other.lead + len(other.coeffs))
        if n is not None:
            hi = min(hi, n)
        return all(self._get(k) == other._get(k) for k in range(lo, hi))

    # -- serialisation -------------------------------------------------------

    def to_json(self) -> dict:
        return {"lead": self.lead, "coeffs": [fmt(c) for c in self.coeffs], "trunc": self.trunc}

    @classmethod
    def from_json(cls, obj) -> "LaurentSeries":
        """Accept the dict form or a bare rational constant ("3/2", 1)."""
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            return cls.constant(to_fraction(obj))
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise MalformedSpec(f"bad series: {obj!r}")
        lead = obj.get("lead", 0)
        trunc = obj.get("trunc")
        if not isinstance(lead, int) or (trunc is not None and not isinstance(trunc, int)):
            raise MalformedSpec("series 'lead' and 'trunc' must be integers")
        return cls(lead, tuple(to_fraction(c) for c in obj["coeffs"]), trunc)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{fmt(c)}*pi^{self.lead + i}")
        body = " + ".join(terms) if terms else "0"
        return body if self.trunc is None else f"{body} + O(pi^{self.trunc})"


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _coerce(x):
    if isinstance(x, LaurentSeries):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentSeries.constant(Fraction(x))
    return None


def valuation(s: LaurentSeries):
    return s.valuation()


def multiply(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Product; the truncation order is ``min(N_a + v_b, N_b + v_a)``."""
    if a.is_exact_zero or b.is_exact_zero:
        return LaurentSeries.zero()
    cands = []
    if a.trunc is not None:
        cands.append(a.trunc + b.lead)
    if b.trunc is not None:
        cands.append(b.trunc + a.lead)
    trunc = min(cands) if cands else None
    lead = a.lead + b.lead
    n = len(a.coeffs) + len(b.coeffs) - 1
    if trunc is not None:
        n = min(n, trunc - lead)
    out = [Fraction(0)] * max(n, 0)
    for i, x in enumerate(a.coeffs):
        if not x or i >= len(out):
            continue
        for j, y in enumerate(b.coeffs):
            if i + j >= len(out):
                break
            out[i + j] += x * y
    return LaurentSeries(lead, tuple(out), trunc)


def invert(a: LaurentSeries, precision: int | None = None) -> LaurentSeries:
    """Multiplicative inverse.

    A truncated input ``O(pi^N)`` with valuation v gives truncation ``N - 2v``.
    An exact monomial inverts exactly; any other exact input is expanded to
    ``precision`` terms (default: the working truncation order).
    """
    if not a.coeffs:
        raise NotInvertible("valuation is not certified; cannot invert")
    v = a.lead
    if a.trunc is None:
        if len(a.coeffs) == 1:
            return LaurentSeries(-v, (1 / a.coeffs[0],), None)
        rel = precision if precision is not None else default_truncation()
    else:
        rel = a.trunc - v
    # invert the unit part u = a / pi^v, known to relative precision rel
    u = a.coeffs
    inv0 = 1 / u[0]
    out = [inv0]
    for k in range(1, rel):
        s = sum((u[j] * out[k - j] for j in range(1, min(k, len(u) - 1) + 1)), Fraction(0))
        out.append(-s * inv0)
    return LaurentSeries(-v, tuple(out), -v + rel)


def unit_power(u: LaurentSeries, q, precision: int | None = None) -> LaurentSeries:
    """``u^q`` for rational q and a unit u with constant term 1 (binomial series)."""
    q = to_fraction(q)
    if u.lead != 0 or not u.coeffs or u.coeffs[0] != 1:
        raise MalformedSpec("unit_power needs a series of the form 1 + O(pi)")
    if q.denominator == 1:
        return u ** int(q)
    rel = u.trunc if u.trunc is not None else (precision or default_truncation())
    x = (u - 1).truncate(rel)
    out = LaurentSeries.constant(1, rel)
    term = LaurentSeries.constant(1, rel)
    binom = Fraction(1)
    for k in range(1, rel):
        term = (term * x).truncate(rel)
        if not term.coeffs:
            break
        binom = binom * (q - k + 1) / k
        out = out + term * binom
    return out.truncate(rel)
