"""Constructive transposed Poisson structures.

Verified container types (TPPair, NTPTuple) plus the constructions that
produce them: brackets induced by a derivation, Kantor doubles, 3-Lie and
(n+1)-Lie lifts, and the nilpotent n-Lie product.  Constructors verify their
defining identities on all basis tuples and refuse bad input with a witness.
"""

from __future__ import annotations

import itertools

from .core import Algebra, Element, LinearMap, NAryAlgebra, SuperAlgebra
from .errors import PreconditionError
from .identities import CheckReport, check_identity
from .linsolve import ExactMatrix, nullspace, rank
from .scalars import Scalar

__all__ = [
    "TPPair",
    "NTPTuple",
    "bracket_from_derivation",
    "tp_pair_from_derivation",
    "recover_derivation",
    "kantor_double",
    "three_lie_from_tp",
    "n_plus_one_lie_candidate",
    "nilpotent_nlie_tp",
    "quasi_poisson_check",
    "both_poisson_and_tp_check",
]


def _require(spec_id: str, bindings: dict, what: str):
    rep = check_identity(spec_id, bindings)
    if not rep.holds:
        raise PreconditionError(
            f"{what}: identity {spec_id!r} fails on basis tuple {rep.witness}"
        )
    return rep


class TPPair:
    """Commutative associative product and Lie bracket on a shared basis,
    linked by 2 z*[x,y] = [z*x, y] + [x, z*y].  Verified at construction."""

    __slots__ = ("product", "bracket")

    def __init__(self, product: Algebra, bracket: Algebra, verify: bool = True):
        if product.dim != bracket.dim:
            raise PreconditionError("product and bracket dimensions differ")
        self.product = product
        self.bracket = bracket
        if verify:
            both = {"product": product, "bracket": bracket}
            _require("comm", {"product": product}, "TPPair product")
            _require("assoc", {"product": product}, "TPPair product")
            _require("anticomm", {"bracket": bracket}, "TPPair bracket")
            _require("jacobi", {"bracket": bracket}, "TPPair bracket")
            _require("tp-compat", both, "TPPair")

    @property
    def dim(self) -> int:
        return self.product.dim

    @property
    def unital(self) -> bool:
        return self.product.unital

    def to_dict(self, provenance: dict | None = None):
        d = {
            "dim": self.dim,
            "basis": list(self.product.basis),
            "products": {
                "product": self.product.table_json(),
                "bracket": self.bracket.table_json(),
            },
            "unital": self.product.unital,
        }
        if self.product.unit is not None:
            d["unit"] = [c.to_json() for c in self.product.unit.coords]
        if provenance:
            d["provenance"] = provenance
        return d

    @staticmethod
    def from_dict(d, verify: bool = True) -> "TPPair":
        return TPPair(
            Algebra.from_dict(d, "product"),
            Algebra.from_dict({**d, "unital": False, "unit": None}, "bracket"),
            verify=verify,
        )

    def __eq__(self, other):
        return (
            isinstance(other, TPPair)
            and self.product == other.product
            and self.bracket == other.bracket
        )


class NTPTuple:
    """Commutative associative product with an n-Lie bracket satisfying
    n z*[x1..xn] = sum_i [x1,..,z*xi,..,xn].  Verified at construction."""

    __slots__ = ("product", "bracket")

    def __init__(self, product: Algebra, bracket: NAryAlgebra, verify: bool = True):
        if product.dim != bracket.dim:
            raise PreconditionError("product and bracket dimensions differ")
        self.product = product
        self.bracket = bracket
        if verify:
            _require("comm", {"product": product}, "NTPTuple product")
            _require("assoc", {"product": product}, "NTPTuple product")
            if not bracket.is_antisymmetric():
                raise PreconditionError("NTPTuple bracket is not antisymmetric")
            _require("nlie-fundamental", {"nary": bracket}, "NTPTuple bracket")
            _require(
                "tp-nlie", {"product": product, "nary": bracket}, "NTPTuple"
            )

    @property
    def dim(self) -> int:
        return self.product.dim

    @property
    def arity(self) -> int:
        return self.bracket.arity

    def to_dict(self, provenance: dict | None = None):
        d = {
            "dim": self.dim,
            "arity": self.arity,
            "basis": list(self.product.basis),
            "products": {
                "product": self.product.table_json(),
                "bracket": self.bracket.to_dict()["products"]["bracket"],
            },
            "unital": self.product.unital,
        }
        if provenance:
            d["provenance"] = provenance
        return d


# ---------------------------------------------------------------------------
# bracket from a derivation

def bracket_from_derivation(a: Algebra, d: LinearMap) -> Algebra:
    """The bracket [x,y] = D(x)*y - x*D(y) induced by a derivation D."""
    _require("comm", {"product": a}, "bracket_from_derivation")
    _require("assoc", {"product": a}, "bracket_from_derivation")
    ok, pair = d.is_derivation_of(a)
    if not ok:
        raise PreconditionError(
            f"map is not a derivation: Leibniz fails on basis pair {pair}"
        )
    dim = a.dim
    table = {}
    for i in range(dim):
        for j in range(dim):
            ei, ej = Element.basis(i, dim), Element.basis(j, dim)
            v = a.product(d.apply(ei), ej) - a.product(ei, d.apply(ej))
            if not v.is_zero:
                table[(i, j)] = {k: c for k, c in enumerate(v.coords) if c}
    return Algebra(dim, a.basis, table)


def tp_pair_from_derivation(a: Algebra, d: LinearMap) -> TPPair:
    return TPPair(a, bracket_from_derivation(a, d))


def recover_derivation(p: TPPair) -> LinearMap:
    """D(x) = [x, 1] for a unital pair; inverts bracket_from_derivation."""
    if not p.unital:
        raise PreconditionError("derivation recovery needs a unital product")
    unit = p.product.unit
    return LinearMap.from_images(
        [p.bracket.product(Element.basis(j, p.dim), unit) for j in range(p.dim)]
    )


# ---------------------------------------------------------------------------
# Kantor double

def kantor_double(p: TPPair) -> SuperAlgebra:
    """Superalgebra on A + Ā: even part multiplies by the product, mixed
    parts shift into the odd copy, and odd*odd lands in the bracket."""
    n = p.dim
    table = {}

    def put(i, j, sv, shift):
        out = {k + shift: c for k, c in sv.items()}
        if out:
            table[(i, j)] = out

    for (i, j), sv in p.product.table.items():
        put(i, j, sv, 0)          # a  * c  = a.c        (even, even)
        put(i, n + j, sv, n)      # a  * dx = (a.d)x     (even, odd)
        put(n + i, j, sv, n)      # bx * c  = (b.c)x     (odd, even)
    for (i, j), sv in p.bracket.table.items():
        put(n + i, n + j, sv, 0)  # bx * dx = [b,d]      (odd, odd)
    parity = (0,) * n + (1,) * n
    basis = list(p.product.basis) + [f"{b}~" for b in p.product.basis]
    return SuperAlgebra(2 * n, parity, table, basis)


# ---------------------------------------------------------------------------
# n-Lie lifts

def _check_bracket_derivation(d: LinearMap, bracket, what: str):
    """Leibniz law of D over an n-ary (or binary) bracket on basis tuples."""
    dim = bracket.dim
    arity = getattr(bracket, "arity", 2)
    apply_ = (
        bracket.apply
        if isinstance(bracket, NAryAlgebra)
        else (lambda args: bracket.product(args[0], args[1]))
    )
    for idx in itertools.product(range(dim), repeat=arity):
        args = [Element.basis(i, dim) for i in idx]
        lhs = d.apply(apply_(args))
        rhs = Element.zero(dim)
        for pos in range(arity):
            with_d = list(args)
            with_d[pos] = d.apply(args[pos])
            rhs = rhs + apply_(with_d)
        if lhs != rhs:
            raise PreconditionError(
                f"{what}: map is not a bracket derivation (basis tuple {idx})"
            )


def three_lie_from_tp(p: TPPair, d: LinearMap) -> NAryAlgebra:
    """[x,y,z] = D(x)*[y,z] - D(y)*[x,z] + D(z)*[x,y] for a derivation D of
    both operations."""
    ok, pair = d.is_derivation_of(p.product)
    if not ok:
        raise PreconditionError(
            f"map is not a product derivation (basis pair {pair})"
        )
    _check_bracket_derivation(d, p.bracket, "three_lie_from_tp")
    dim = p.dim
    basis = [Element.basis(i, dim) for i in range(dim)]
    dimg = [d.apply(e) for e in basis]
    table = {}
    for i, j, k in itertools.product(range(dim), repeat=3):
        v = (
            p.product.product(dimg[i], p.bracket.product(basis[j], basis[k]))
            - p.product.product(dimg[j], p.bracket.product(basis[i], basis[k]))
            + p.product.product(dimg[k], p.bracket.product(basis[i], basis[j]))
        )
        if not v.is_zero:
            table[(i, j, k)] = {r: c for r, c in enumerate(v.coords) if c}
    return NAryAlgebra(dim, 3, table, p.product.basis)


def n_plus_one_lie_candidate(t: NTPTuple, d: LinearMap):
    """Candidate (n+1)-ary bracket sum_i (-1)^{i+1} D(x_i)*[x_1,..^i..,x_{n+1}].

    Returns (candidate, reports): whether "nlie-fundamental" and "tp-nlie"
    hold for this instance is reported, never assumed.
    """
    ok, pair = d.is_derivation_of(t.product)
    if not ok:
        raise PreconditionError(
            f"map is not a product derivation (basis pair {pair})"
        )
    _check_bracket_derivation(d, t.bracket, "n_plus_one_lie_candidate")
    dim, n = t.dim, t.arity
    basis = [Element.basis(i, dim) for i in range(dim)]
    dimg = [d.apply(e) for e in basis]
    table = {}
    for idx in itertools.product(range(dim), repeat=n + 1):
        v = Element.zero(dim)
        for pos in range(n + 1):
            rest = [basis[idx[q]] for q in range(n + 1) if q != pos]
            term = t.product.product(dimg[idx[pos]], t.bracket.apply(rest))
            v = v + (term if pos % 2 == 0 else -term)
        if not v.is_zero:
            table[idx] = {r: c for r, c in enumerate(v.coords) if c}
    cand = NAryAlgebra(dim, n + 1, table, t.product.basis)
    reports = {
        "nlie-fundamental": check_identity("nlie-fundamental", {"nary": cand}),
        "tp-nlie": check_identity(
            "tp-nlie", {"product": t.product, "nary": cand}
        ),
    }
    return cand, reports


# ---------------------------------------------------------------------------
# nilpotent n-Lie construction

def derived_span_matrix(l: NAryAlgebra) -> ExactMatrix:
    """Columns are all basis-bracket outputs (a spanning set of the derived
    subalgebra)."""
    cols = []
    for idx in itertools.product(range(l.dim), repeat=l.arity):
        sv = l.basis_apply(idx)
        if sv:
            cols.append(sv)
    m = ExactMatrix(l.dim, len(cols))
    for j, sv in enumerate(cols):
        for k, c in sv.items():
            m.set(k, j, c)
    return m


def in_derived_span(l: NAryAlgebra, index: int) -> bool:
    m = derived_span_matrix(l)
    base = rank(m)
    ext = ExactMatrix(l.dim, m.ncols + 1, [dict(r) for r in m.rows])
    ext.set(index, m.ncols, Scalar(1))
    return rank(ext) == base


def annihilates(l: NAryAlgebra, index: int) -> bool:
    """True when e_index kills every bracket it enters (any position)."""
    dim, n = l.dim, l.arity
    for pos in range(n):
        for rest in itertools.product(range(dim), repeat=n - 1):
            idx = rest[:pos] + (index,) + rest[pos:]
            if l.basis_apply(idx):
                return False
    return True


def nilpotent_nlie_tp(l: NAryAlgebra, witness) -> NTPTuple:
    """Nonzero TP product on a nilpotent n-Lie algebra.

    ``witness`` is (generators, k): n basis indices outside the derived
    subalgebra and one annihilator index.  The product sends every pair of
    chosen generators to e_k and everything else to zero.
    """
    gens, k = witness
    gens = tuple(gens)
    n, dim = l.arity, l.dim
    if len(gens) != n:
        raise PreconditionError(f"witness must pick {n} generators")
    if n >= dim:
        raise PreconditionError("arity must be smaller than the dimension")
    if k in gens:
        raise PreconditionError("annihilator index collides with a generator")
    if not annihilates(l, k):
        raise PreconditionError(f"e_{k} is not in the annihilator")
    for g in gens:
        if in_derived_span(l, g):
            raise PreconditionError(f"e_{g} lies in the derived subalgebra")
    table = {
        (i, j): {k: Scalar(1)}
        for i in gens
        for j in gens
    }
    product = Algebra(dim, l.basis, table)
    return NTPTuple(product, l)


# ---------------------------------------------------------------------------
# derived checks

def quasi_poisson_check(p: TPPair) -> CheckReport:
    """The quasi-Poisson identity with D(x) = [x,1] on a unital pair."""
    d = recover_derivation(p)
    return check_identity(
        "quasi-poisson",
        {"product": p.product, "bracket": p.bracket, "aux": d},
    )


def both_poisson_and_tp_check(t: NTPTuple) -> dict:
    """Equivalence report: the tuple also satisfies the Poisson n-Lie rule
    exactly when products annihilate brackets in both orders.

    Keys: "poisson_nlie" (CheckReport), "product_kills_bracket" and
    "bracket_kills_product" (verdict + witness), "equivalence_confirmed".
    """
    rep = check_identity(
        "poisson-nlie", {"product": t.product, "nary": t.bracket}
    )
    dim, n = t.dim, t.arity
    basis = [Element.basis(i, dim) for i in range(dim)]

    def scan(fn):
        for idx in itertools.product(range(dim), repeat=n + 1):
            if not fn(idx).is_zero:
                return {"holds": False, "witness": list(idx)}
        return {"holds": True, "witness": None}

    side1 = scan(
        lambda idx: t.product.product(
            basis[idx[0]], t.bracket.apply([basis[i] for i in idx[1:]])
        )
    )
    side2 = scan(
        lambda idx: t.bracket.apply(
            [t.product.product(basis[idx[0]], basis[idx[1]])]
            + [basis[i] for i in idx[2:]]
        )
    )
    both = side1["holds"] and side2["holds"]
    return {
        "poisson_nlie": rep,
        "product_kills_bracket": side1,
        "bracket_kills_product": side2,
        "equivalence_confirmed": rep.holds == both,
    }
