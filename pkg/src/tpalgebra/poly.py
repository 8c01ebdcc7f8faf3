"""Multivariate polynomials over the rationals, derivations, and fractions.

Polynomials use a dense fixed-length exponent-vector encoding per ring; the
zero polynomial is the empty term map.  Fractions of polynomials are never
gcd-reduced: equality is decided by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, InvalidFractionError

ExpVec = tuple[int, ...]


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[ExpVec, Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[ExpVec, Fraction] = {}
        if terms:
            for ev, c in terms.items():
                c = Fraction(c)
                if c:
                    if len(ev) != nvars:
                        raise DimensionError("exponent vector length != nvars")
                    self.terms[tuple(ev)] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def const(c, nvars: int) -> "Polynomial":
        c = Fraction(c)
        p = Polynomial(nvars)
        if c:
            p.terms[(0,) * nvars] = c
        return p

    @staticmethod
    def variable(i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range")
        ev = tuple(1 if j == i else 0 for j in range(nvars))
        return Polynomial(nvars, {ev: Fraction(1)})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DimensionError("polynomials over different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for ev, c in other.terms.items():
            s = out.get(ev, Fraction(0)) + c
            if s:
                out[ev] = s
            else:
                out.pop(ev, None)
        r = Polynomial(self.nvars)
        r.terms = out
        return r

    def __neg__(self) -> "Polynomial":
        r = Polynomial(self.nvars)
        r.terms = {ev: -c for ev, c in self.terms.items()}
        return r

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict[ExpVec, Fraction] = {}
        for ev1, c1 in self.terms.items():
            for ev2, c2 in other.terms.items():
                ev = tuple(a + b for a, b in zip(ev1, ev2))
                s = out.get(ev, Fraction(0)) + c1 * c2
                if s:
                    out[ev] = s
                else:
                    out.pop(ev, None)
        r = Polynomial(self.nvars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        r = Polynomial(self.nvars)
        if c:
            r.terms = {ev: c * t for ev, t in self.terms.items()}
        return r

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        parts = []
        for ev in sorted(self.terms):
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(ev)
                if e
            )
            parts.append(f"{self.terms[ev]}{'*' + mono if mono else ''}")
        return "Polynomial(" + " + ".join(parts) + ")"

    # -- serialization: list of [exponent-vector, coefficient] --------------

    def to_json(self):
        return [[list(ev), str(c)] for ev, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(obj, nvars: int) -> "Polynomial":
        return Polynomial(nvars, {tuple(ev): Fraction(c) for ev, c in obj})


class DerivationSpec:
    """Images of the ring variables under a derivation, one per variable."""

    __slots__ = ("nvars", "images")

    def __init__(self, images: list[Polynomial]):
        self.nvars = len(images)
        for p in images:
            if p.nvars != self.nvars:
                raise DimensionError("derivation image count != variable count")
        self.images = tuple(images)

    @staticmethod
    def zero(nvars: int) -> "DerivationSpec":
        return DerivationSpec([Polynomial.zero(nvars)] * nvars)

    def to_json(self):
        return {"nvars": self.nvars, "images": [p.to_json() for p in self.images]}

    @staticmethod
    def from_json(obj) -> "DerivationSpec":
        n = obj["nvars"]
        return DerivationSpec([Polynomial.from_json(p, n) for p in obj["images"]])


def poly_derive(p: Polynomial, d: DerivationSpec) -> Polynomial:
    """Extend the derivation from generators by linearity and Leibniz."""
    if p.nvars != d.nvars:
        raise DimensionError("polynomial and derivation variable counts differ")
    out = Polynomial.zero(p.nvars)
    for ev, c in p.terms.items():
        for i, e in enumerate(ev):
            if e == 0 or d.images[i].is_zero:
                continue
            rest = list(ev)
            rest[i] = e - 1
            mono = Polynomial(p.nvars, {tuple(rest): c * e})
            out = out + mono * d.images[i]
    return out


class PolyFraction:
    """Unreduced quotient of polynomials; den must be nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.const(1, num.nvars)
        if den.is_zero:
            raise InvalidFractionError("zero denominator")
        if num.nvars != den.nvars:
            raise DimensionError("fraction parts over different rings")
        self.num = num
        self.den = den

    @property
    def nvars(self):
        return self.num.nvars

    def _check(self, other: "PolyFraction"):
        if self.nvars != other.nvars:
            raise DimensionError("fractions over different rings")

    def __add__(self, other: "PolyFraction") -> "PolyFraction":
        self._check(other)
        return PolyFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyFraction(self.num.scale(other), self.den)
        self._check(other)
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __repr__(self):
        return f"PolyFraction({self.num!r}, {self.den!r})"


def frac_eq(a: PolyFraction, b: PolyFraction) -> bool:
    """Cross-multiplication equality; never reduces by gcd."""
    if a.den.is_zero or b.den.is_zero:
        raise InvalidFractionError("zero denominator")
    return (a.num * b.den - b.num * a.den).is_zero
