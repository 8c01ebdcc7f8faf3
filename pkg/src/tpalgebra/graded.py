"""Rule-based graded algebras: the Witt algebra W and its subalgebra W(1).

Elements are finitely supported maps index -> Scalar, so identities can be
checked exactly on any finite index window without materializing an infinite
table.  The bracket is [e_i, e_j] = (i - j) e_{i+j}; transposed Poisson
products have the form e_i . e_j = sum_t alpha_t e_{i+j+t} for a finite
coefficient family alpha.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .errors import PreconditionError
from .scalars import Scalar

GVec = dict[int, Scalar]


def _gadd(a: GVec, b: GVec) -> GVec:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, Scalar(0)) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _gscale(c: Scalar, a: GVec) -> GVec:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


class GradedAlgebra:
    """Bilinear operation on finitely supported graded vectors, defined by a
    rule on basis indices."""

    __slots__ = ("rule", "floor")

    def __init__(self, rule: Callable[[int, int], GVec], floor: int | None = None):
        self.rule = rule
        self.floor = floor

    def check_index(self, i: int):
        if self.floor is not None and i < self.floor:
            raise PreconditionError(f"index {i} below floor {self.floor}")

    def basis_product(self, i: int, j: int) -> GVec:
        self.check_index(i)
        self.check_index(j)
        return {k: Scalar.of(c) for k, c in self.rule(i, j).items() if Scalar.of(c)}

    def product(self, x: GVec, y: GVec) -> GVec:
        acc: GVec = {}
        for i, ci in x.items():
            for j, cj in y.items():
                acc = _gadd(acc, _gscale(ci * cj, self.basis_product(i, j)))
        return acc


def witt_bracket(floor: int | None = None) -> GradedAlgebra:
    def rule(i, j):
        c = Scalar(i - j)
        return {i + j: c} if c else {}

    return GradedAlgebra(rule, floor)


class WittTPPair:
    """The Witt bracket together with the product e_i.e_j = sum alpha_t
    e_{i+j+t}; floor -1 selects W(1), floor None the full Witt algebra."""

    __slots__ = ("alpha", "floor", "bracket", "product")

    def __init__(self, alpha: dict, floor: int | None = None):
        self.alpha = {int(t): Scalar.of(c) for t, c in alpha.items() if Scalar.of(c)}
        self.floor = floor
        if floor is not None:
            if floor != -1:
                raise PreconditionError("only floor -1 (W(1)) is meaningful")
            bad = [t for t in self.alpha if t <= 0]
            if bad:
                raise PreconditionError(
                    f"W(1) requires positive offsets, got {sorted(bad)}"
                )

        def prod_rule(i, j):
            return {i + j + t: c for t, c in self.alpha.items()}

        self.bracket = witt_bracket(floor)
        self.product = GradedAlgebra(prod_rule, floor)

    def to_dict(self):
        return {
            "family": "witt1" if self.floor == -1 else "witt",
            "alpha": {str(t): self.alpha[t].to_json() for t in sorted(self.alpha)},
            "floor": self.floor,
        }


def witt_tp_pair(alpha: dict, floor: int | None = None) -> WittTPPair:
    return WittTPPair(alpha, floor)


def verify_window(pair: WittTPPair, lo: int, hi: int) -> dict:
    """Exact comm/assoc/tp-compat defects on every basis tuple with indices
    in [lo, hi].  Output indices may leave the window; arithmetic stays exact
    because elements are genuine graded vectors."""
    if pair.floor is not None and lo < pair.floor:
        raise PreconditionError(f"window start {lo} below floor {pair.floor}")
    mul, br = pair.product, pair.bracket
    rng = range(lo, hi + 1)
    pairs = triples = 0
    failure = None

    for i, j in itertools.product(rng, repeat=2):
        pairs += 1
        if mul.basis_product(i, j) != mul.basis_product(j, i):
            failure = {"identity": "comm", "tuple": [i, j]}
            break

    if failure is None:
        for i, j, k in itertools.product(rng, repeat=3):
            triples += 1
            ei, ej, ek = {i: Scalar(1)}, {j: Scalar(1)}, {k: Scalar(1)}
            if mul.product(mul.product(ei, ej), ek) != mul.product(
                ei, mul.product(ej, ek)
            ):
                failure = {"identity": "assoc", "tuple": [i, j, k]}
                break
            lhs = _gscale(Scalar(2), mul.product(ek, br.product(ei, ej)))
            rhs = _gadd(
                br.product(mul.product(ek, ei), ej),
                br.product(ei, mul.product(ek, ej)),
            )
            if lhs != rhs:
                failure = {"identity": "tp-compat", "tuple": [i, j, k]}
                break

    report = {
        "family": pair.to_dict()["family"],
        "alpha": pair.to_dict()["alpha"],
        "window": [lo, hi],
        "pairs_checked": pairs,
        "triples_checked": triples,
        "verdict": "holds" if failure is None else "fails",
    }
    if failure is not None:
        report["first_failure"] = failure
    return report


def degree_derivation_image(i: int) -> GVec:
    """The degree derivation D(e_i) = i e_i (a bracket derivation of W)."""
    return {i: Scalar(i)} if i else {}


def graded_three_lie(pair: WittTPPair):
    """Rule for the 3-ary lift [x,y,z] = D(x).[y,z] - D(y).[x,z] + D(z).[x,y]
    with D the degree derivation; returns a basis-rule function."""
    mul, br = pair.product, pair.bracket

    def rule(i, j, k):
        acc = _gscale(
            Scalar(1),
            mul.product(degree_derivation_image(i), br.basis_product(j, k)),
        )
        acc = _gadd(
            acc,
            _gscale(
                Scalar(-1),
                mul.product(degree_derivation_image(j), br.basis_product(i, k)),
            ),
        )
        return _gadd(
            acc,
            mul.product(degree_derivation_image(k), br.basis_product(i, j)),
        )

    return rule


def verify_three_lie_window(pair: WittTPPair, lo: int, hi: int) -> dict:
    """Antisymmetry and the n=3 compatibility rule for the graded 3-ary lift
    on a window; a desk-scale probe, reported rather than assumed."""
    rule = graded_three_lie(pair)
    mul = pair.product
    rng = range(lo, hi + 1)
    checked = 0
    failure = None
    for i, j, k in itertools.product(rng, repeat=3):
        checked += 1
        base = rule(i, j, k)
        if _gadd(base, rule(j, i, k)) or _gadd(base, rule(i, k, j)):
            failure = {"identity": "antisymmetry", "tuple": [i, j, k]}
            break
    if failure is None:
        for i, j, k, z in itertools.product(rng, repeat=4):
            checked += 1
            ez = {z: Scalar(1)}
            lhs = _gscale(Scalar(3), mul.product(ez, rule(i, j, k)))
            rhs: GVec = {}
            for pos, idx in enumerate((i, j, k)):
                scaled = mul.product(ez, {idx: Scalar(1)})
                term: GVec = {}
                for m, c in scaled.items():
                    args = [i, j, k]
                    args[pos] = m
                    term = _gadd(term, _gscale(c, rule(*args)))
                rhs = _gadd(rhs, term)
            if lhs != rhs:
                failure = {"identity": "tp-nlie", "tuple": [i, j, k, z]}
                break
    report = {
        "window": [lo, hi],
        "tuples_checked": checked,
        "verdict": "holds" if failure is None else "fails",
    }
    if failure is not None:
        report["first_failure"] = failure
    return report
