"""Exact field scalars: rationals and Gaussian rationals.

A Scalar is a pair of ``fractions.Fraction`` values (re, im).  A scalar with
im == 0 is a plain rational and compares equal to the corresponding rational;
all arithmetic is exact.  Instances are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidFractionError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class Scalar:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(x) -> "Scalar":
        """Coerce an int, Fraction, string ("p/q") or Scalar."""
        if isinstance(x, Scalar):
            return x
        return Scalar(_as_fraction(x))

    @staticmethod
    def parse(obj) -> "Scalar":
        """Parse the serialized form: "p/q" / "p" or {"re": ..., "im": ...}."""
        if isinstance(obj, dict):
            return Scalar(Fraction(obj["re"]), Fraction(obj["im"]))
        return Scalar(Fraction(obj))

    def to_json(self):
        if self.im:
            return {"re": str(self.re), "im": str(self.im)}
        return str(self.re)

    # -- predicates --------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = Scalar.of(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar.of(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.of(other) - self

    def __mul__(self, other):
        other = Scalar.of(other)
        if not self.im and not other.im:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def inverse(self) -> "Scalar":
        if not self:
            raise InvalidFractionError("division by zero scalar")
        if not self.im:
            return Scalar(1 / self.re)
        norm = self.re * self.re + self.im * self.im
        return Scalar(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"Scalar({self.re})"
        return f"Scalar({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"{self.re}+{self.im}i"


ZERO = Scalar(0)
ONE = Scalar(1)
HALF = Scalar(Fraction(1, 2))
I = Scalar(0, 1)


def S(x) -> Scalar:
    """Shorthand coercion used across the package and tests."""
    return Scalar.of(x)
