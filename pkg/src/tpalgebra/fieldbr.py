"""Transposed Poisson bracket on fields of rational functions.

A derivation D of the polynomial ring induces a bracket [p,q] = D(p)q - pD(q)
on polynomials, which extends to fractions by

    <<a/b, c/d>> = ([a,b] c d - a b [c,d]) / (b^2 d^2).

``verify_field_axioms`` checks antisymmetry, Jacobi and the transposed
Poisson compatibility on seeded random fraction triples, exactly (via
cross-multiplied equality), and reports the first failure if any.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import InvalidFractionError
from .poly import DerivationSpec, PolyFraction, Polynomial, frac_eq, poly_derive

__all__ = ["FieldContext", "field_bracket", "verify_field_axioms"]


class FieldContext:
    """Variable count plus the derivation driving the bracket."""

    __slots__ = ("nvars", "der")

    def __init__(self, der: DerivationSpec):
        self.der = der
        self.nvars = der.nvars

    def poly_bracket(self, p: Polynomial, q: Polynomial) -> Polynomial:
        return poly_derive(p, self.der) * q - p * poly_derive(q, self.der)


def field_bracket(
    ctx: FieldContext, a: PolyFraction, b: PolyFraction, corrupt_sign: bool = False
) -> PolyFraction:
    """The fraction-level bracket; output is left unreduced.

    ``corrupt_sign`` flips the second numerator term (a deliberate negative
    control for the verifier).
    """
    if a.den.is_zero or b.den.is_zero:
        raise InvalidFractionError("zero denominator")
    lhs = ctx.poly_bracket(a.num, a.den) * b.num * b.den
    rhs = a.num * a.den * ctx.poly_bracket(b.num, b.den)
    num = lhs + rhs if corrupt_sign else lhs - rhs
    return PolyFraction(num, a.den * a.den * b.den * b.den)


def _random_poly(rng: random.Random, nvars: int, degree: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        ev = [0] * nvars
        budget = degree
        for v in range(nvars):
            e = rng.randint(0, budget)
            ev[v] = e
            budget -= e
        c = rng.randint(-3, 3)
        if c:
            terms[tuple(ev)] = Fraction(c)
    return Polynomial(nvars, terms)


def _random_fraction(rng: random.Random, nvars: int, degree: int) -> PolyFraction:
    num = _random_poly(rng, nvars, degree)
    while True:
        den = _random_poly(rng, nvars, degree)
        if not den.is_zero:
            return PolyFraction(num, den)


def verify_field_axioms(
    ctx: FieldContext,
    samples: int = 100,
    degree: int = 3,
    seed: int = 0,
    corrupt_sign: bool = False,
) -> dict:
    """Antisymmetry, Jacobi and 2F<<G,H>> = <<FG,H>> + <<G,FH>> on seeded
    random fraction triples; every individual check is exact."""
    rng = random.Random(seed)
    zero = PolyFraction(Polynomial.zero(ctx.nvars))

    def br(x, y):
        return field_bracket(ctx, x, y, corrupt_sign=corrupt_sign)

    failure = None
    checked = 0
    for idx in range(samples):
        f = _random_fraction(rng, ctx.nvars, degree)
        g = _random_fraction(rng, ctx.nvars, degree)
        h = _random_fraction(rng, ctx.nvars, degree)
        checked += 1
        if not frac_eq(br(f, g) + br(g, f), zero):
            failure = {"sample": idx, "axiom": "antisymmetry"}
            break
        jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
        if not frac_eq(jac, zero):
            failure = {"sample": idx, "axiom": "jacobi"}
            break
        compat = 2 * (f * br(g, h)) - br(f * g, h) - br(g, f * h)
        if not frac_eq(compat, zero):
            failure = {"sample": idx, "axiom": "tp-compat"}
            break
    return {
        "vars": ctx.nvars,
        "degree": degree,
        "samples_requested": samples,
        "samples_checked": checked,
        "seed": seed,
        "corrupt_sign": corrupt_sign,
        "verdict": "holds" if failure is None else "fails",
        **({"first_failure": failure} if failure else {}),
    }
