"""Declarative identity catalog and the basis-tuple defect checker.

Each identity is data: a term tree over named operation slots, evaluated on
every basis tuple.  Over a characteristic-0 field a multilinear defect
vanishes identically iff it vanishes on all basis tuples, so "holds" is a
complete verdict.  The failure witness is the lexicographically first failing
tuple.

Slots:
    product  - commutative associative product (Algebra)
    bracket  - binary bracket (Algebra)
    nary     - n-ary bracket (NAryAlgebra)
    aux      - auxiliary linear map (LinearMap), e.g. a derivation
    unit     - unit Element (taken from the product algebra when unital)
    helem    - fixed element h for the quasi-automorphism identity

The catalog is listed by ``catalog_table()``; see docs/identity-catalog.md.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .core import Algebra, Element, LinearMap, NAryAlgebra, SuperAlgebra
from .errors import DimensionError, PreconditionError
from .scalars import Scalar

# ---------------------------------------------------------------------------
# term-tree language

A = lambda i: ("arg", i)                       # i-th argument
P = lambda s, t, u: ("op2", s, t, u)           # binary slot application
N = lambda s, ts: ("opn", s, tuple(ts))        # n-ary slot application
L = lambda s, t: ("lin", s, t)                 # linear-map slot application
E = lambda s: ("elem", s)                      # fixed element slot
UNIT = ("elem", "unit")
SC = lambda c, t: ("scale", Scalar.of(c), t)   # scalar multiple
SUM = lambda *ts: ("sum", tuple(ts))


def eval_term(term, bindings: dict, args: list[Element]) -> Element:
    kind = term[0]
    if kind == "arg":
        return args[term[1]]
    if kind == "op2":
        _, slot, t, u = term
        return bindings[slot].product(
            eval_term(t, bindings, args), eval_term(u, bindings, args)
        )
    if kind == "opn":
        _, slot, ts = term
        return bindings[slot].apply([eval_term(t, bindings, args) for t in ts])
    if kind == "lin":
        _, slot, t = term
        return bindings[slot].apply(eval_term(t, bindings, args))
    if kind == "elem":
        return bindings[term[1]]
    if kind == "scale":
        _, c, t = term
        return eval_term(t, bindings, args).scale(c)
    if kind == "sum":
        parts = [eval_term(t, bindings, args) for t in term[1]]
        acc = parts[0]
        for p in parts[1:]:
            acc = acc + p
        return acc
    raise ValueError(f"unknown term node {kind!r}")


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    arity: int | None                 # None: depends on the bound n-ary arity
    slots: tuple[str, ...]
    describe: str
    term: tuple | None = None
    term_builder: Callable[[int], tuple] | None = None
    nary_arity: Callable[[int], int] | None = None  # tuple arity from bracket arity


@dataclass
class CheckReport:
    identity: str
    holds: bool
    tuples_checked: int
    witness: tuple[int, ...] | None = None
    defect: Element | None = None
    detail: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def to_dict(self):
        d = {
            "identity": self.identity,
            "verdict": self.verdict,
            "tuples_checked": self.tuples_checked,
        }
        if self.witness is not None:
            d["witness"] = list(self.witness)
            d["defect"] = [c.to_json() for c in self.defect.coords]
        if self.detail:
            d["detail"] = self.detail
        return d


# ---------------------------------------------------------------------------
# catalog

def _cyclic_jacobi(br):
    return SUM(
        P(br, P(br, A(0), A(1)), A(2)),
        P(br, P(br, A(1), A(2)), A(0)),
        P(br, P(br, A(2), A(0)), A(1)),
    )


_HALF = Fraction(1, 2)

_FIXED: list[IdentitySpec] = [
    IdentitySpec(
        "comm", 2, ("product",),
        "x*y - y*x",
        term=SUM(P("product", A(0), A(1)), SC(-1, P("product", A(1), A(0)))),
    ),
    IdentitySpec(
        "assoc", 3, ("product",),
        "(x*y)*z - x*(y*z)",
        term=SUM(
            P("product", P("product", A(0), A(1)), A(2)),
            SC(-1, P("product", A(0), P("product", A(1), A(2)))),
        ),
    ),
    IdentitySpec(
        "anticomm", 2, ("bracket",),
        "[x,y] + [y,x]",
        term=SUM(P("bracket", A(0), A(1)), P("bracket", A(1), A(0))),
    ),
    IdentitySpec(
        "jacobi", 3, ("bracket",),
        "[[x,y],z] + [[y,z],x] + [[z,x],y]",
        term=_cyclic_jacobi("bracket"),
    ),
    IdentitySpec(
        "tp-compat", 3, ("product", "bracket"),
        "2 z*[x,y] - [z*x,y] - [x,z*y]",
        term=SUM(
            SC(2, P("product", A(2), P("bracket", A(0), A(1)))),
            SC(-1, P("bracket", P("product", A(2), A(0)), A(1))),
            SC(-1, P("bracket", A(0), P("product", A(2), A(1)))),
        ),
    ),
    IdentitySpec(
        "poisson-leibniz", 3, ("product", "bracket"),
        "[x*y,z] - x*[y,z] - [x,z]*y",
        term=SUM(
            P("bracket", P("product", A(0), A(1)), A(2)),
            SC(-1, P("product", A(0), P("bracket", A(1), A(2)))),
            SC(-1, P("product", P("bracket", A(0), A(2)), A(1))),
        ),
    ),
    IdentitySpec(
        "gen-poisson", 3, ("product", "bracket", "unit"),
        "{x,y*z} - {x,y}*z - y*{x,z} + {x,1}*y*z",
        term=SUM(
            P("bracket", A(0), P("product", A(1), A(2))),
            SC(-1, P("product", P("bracket", A(0), A(1)), A(2))),
            SC(-1, P("product", A(1), P("bracket", A(0), A(2)))),
            P("product", P("product", P("bracket", A(0), UNIT), A(1)), A(2)),
        ),
    ),
    IdentitySpec(
        "jordan-bracket-unital", 3, ("product", "bracket", "unit"),
        "{x,{y,z}} - {{x,y},z} - {y,{x,z}} - {x,1}*{y,z} - {y,1}*{z,x} - {z,1}*{x,y}",
        term=SUM(
            P("bracket", A(0), P("bracket", A(1), A(2))),
            SC(-1, P("bracket", P("bracket", A(0), A(1)), A(2))),
            SC(-1, P("bracket", A(1), P("bracket", A(0), A(2)))),
            SC(-1, P("product", P("bracket", A(0), UNIT), P("bracket", A(1), A(2)))),
            SC(-1, P("product", P("bracket", A(1), UNIT), P("bracket", A(2), A(0)))),
            SC(-1, P("product", P("bracket", A(2), UNIT), P("bracket", A(0), A(1)))),
        ),
    ),
    IdentitySpec(
        "jordan-bracket-1", 4, ("product", "bracket"),
        "{{x,y}*z,t} + {{y,t}*z,x} + {{t,x}*z,y}"
        " - {x,y}*{z,t} - {y,t}*{z,x} - {t,x}*{z,y}",
        term=SUM(
            P("bracket", P("product", P("bracket", A(0), A(1)), A(2)), A(3)),
            P("bracket", P("product", P("bracket", A(1), A(3)), A(2)), A(0)),
            P("bracket", P("product", P("bracket", A(3), A(0)), A(2)), A(1)),
            SC(-1, P("product", P("bracket", A(0), A(1)), P("bracket", A(2), A(3)))),
            SC(-1, P("product", P("bracket", A(1), A(3)), P("bracket", A(2), A(0)))),
            SC(-1, P("product", P("bracket", A(3), A(0)), P("bracket", A(2), A(1)))),
        ),
    ),
    IdentitySpec(
        "jordan-bracket-2", 4, ("product", "bracket"),
        "{y*t,z}*x + {x,z}*y*t - {t*x,z}*y - {y,z}*t*x",
        term=SUM(
            P("product", P("bracket", P("product", A(1), A(3)), A(2)), A(0)),
            P("product", P("product", P("bracket", A(0), A(2)), A(1)), A(3)),
            SC(-1, P("product", P("bracket", P("product", A(3), A(0)), A(2)), A(1))),
            SC(-1, P("product", P("product", P("bracket", A(1), A(2)), A(3)), A(0))),
        ),
    ),
    IdentitySpec(
        "jordan-bracket-3", 4, ("product", "bracket"),
        "{t*x,y*z} + {t*y,x*z} + {x*y*z,t}"
        " - {t*y,z}*x - {t*x,z}*y - x*y*{z,t}",
        term=SUM(
            P("bracket", P("product", A(3), A(0)), P("product", A(1), A(2))),
            P("bracket", P("product", A(3), A(1)), P("product", A(0), A(2))),
            P("bracket", P("product", P("product", A(0), A(1)), A(2)), A(3)),
            SC(-1, P("product", P("bracket", P("product", A(3), A(1)), A(2)), A(0))),
            SC(-1, P("product", P("bracket", P("product", A(3), A(0)), A(2)), A(1))),
            SC(-1, P("product", P("product", A(0), A(1)), P("bracket", A(2), A(3)))),
        ),
    ),
    IdentitySpec(
        "gd", 3, ("product", "bracket"),
        "[x,y*z] - [z,y*x] + [y,x]*z - [y,z]*x - y*[x,z]",
        term=SUM(
            P("bracket", A(0), P("product", A(1), A(2))),
            SC(-1, P("bracket", A(2), P("product", A(1), A(0)))),
            P("product", P("bracket", A(1), A(0)), A(2)),
            SC(-1, P("product", P("bracket", A(1), A(2)), A(0))),
            SC(-1, P("product", A(1), P("bracket", A(0), A(2)))),
        ),
    ),
    IdentitySpec(
        "f-manifold", 4, ("product", "bracket"),
        "[x*y,z*t] - [x*y,z]*t - [x*y,t]*z - x*[y,z*t] - y*[x,z*t]"
        " + x*z*[y,t] + y*z*[x,t] + y*t*[x,z] + x*t*[y,z]",
        term=SUM(
            P("bracket", P("product", A(0), A(1)), P("product", A(2), A(3))),
            SC(-1, P("product", P("bracket", P("product", A(0), A(1)), A(2)), A(3))),
            SC(-1, P("product", P("bracket", P("product", A(0), A(1)), A(3)), A(2))),
            SC(-1, P("product", A(0), P("bracket", A(1), P("product", A(2), A(3))))),
            SC(-1, P("product", A(1), P("bracket", A(0), P("product", A(2), A(3))))),
            P("product", P("product", A(0), A(2)), P("bracket", A(1), A(3))),
            P("product", P("product", A(1), A(2)), P("bracket", A(0), A(3))),
            P("product", P("product", A(1), A(3)), P("bracket", A(0), A(2))),
            P("product", P("product", A(0), A(3)), P("bracket", A(1), A(2))),
        ),
    ),
    IdentitySpec(
        "quasi-poisson", 3, ("product", "bracket", "aux"),
        "a*(D[b,c] + [b,c]) - [a*(D(b)+b),c] - [b,a*(D(c)+c)]"
        " - [a,b]*(D(c)+c) + (D(b)+b)*[a,c]  (aux = derivation D)",
        term=SUM(
            P("product", A(0), SUM(L("aux", P("bracket", A(1), A(2))),
                                   P("bracket", A(1), A(2)))),
            SC(-1, P("bracket", P("product", A(0), SUM(L("aux", A(1)), A(1))), A(2))),
            SC(-1, P("bracket", A(1), P("product", A(0), SUM(L("aux", A(2)), A(2))))),
            SC(-1, P("product", P("bracket", A(0), A(1)), SUM(L("aux", A(2)), A(2)))),
            P("product", SUM(L("aux", A(1)), A(1)), P("bracket", A(0), A(2))),
        ),
    ),
    IdentitySpec(
        "hom-lie", 3, ("bracket", "aux"),
        "[phi(x),[y,z]] + [phi(y),[z,x]] + [phi(z),[x,y]]  (aux = phi)",
        term=SUM(
            P("bracket", L("aux", A(0)), P("bracket", A(1), A(2))),
            P("bracket", L("aux", A(1)), P("bracket", A(2), A(0))),
            P("bracket", L("aux", A(2)), P("bracket", A(0), A(1))),
        ),
    ),
    IdentitySpec(
        "farkas-relation", 3, ("product", "bracket", "aux"),
        "D(x)*y*z - 1/2([x*y,z] + [x*z,y])  (aux = derivation D)",
        term=SUM(
            P("product", P("product", L("aux", A(0)), A(1)), A(2)),
            SC(-_HALF, P("bracket", P("product", A(0), A(1)), A(2))),
            SC(-_HALF, P("bracket", P("product", A(0), A(2)), A(1))),
        ),
    ),
    IdentitySpec(
        "quasi-auto", 2, ("product", "bracket", "helem"),
        "phi_h^2 [x,y] - [phi_h(x),phi_h(y)]  with phi_h(x) = h*x, fixed h",
        term=SUM(
            P("product", E("helem"), P("product", E("helem"),
                                       P("bracket", A(0), A(1)))),
            SC(-1, P("bracket", P("product", E("helem"), A(0)),
                     P("product", E("helem"), A(1)))),
        ),
    ),
]


def _tp_nlie_term(n: int) -> tuple:
    # n z*[x1..xn] - sum_i [x1,..,z*xi,..,xn]; z is argument n
    parts = [SC(n, P("product", A(n), N("nary", [A(i) for i in range(n)])))]
    for i in range(n):
        args = [A(j) if j != i else P("product", A(n), A(i)) for j in range(n)]
        parts.append(SC(-1, N("nary", args)))
    return SUM(*parts)


def _poisson_nlie_term(n: int) -> tuple:
    # [x*y,z2..zn] - x*[y,z2..zn] - [x,z2..zn]*y; args: x, y, z2..zn
    zs = [A(i) for i in range(2, n + 1)]
    return SUM(
        N("nary", [P("product", A(0), A(1))] + zs),
        SC(-1, P("product", A(0), N("nary", [A(1)] + zs))),
        SC(-1, P("product", N("nary", [A(0)] + zs), A(1))),
    )


def _nlie_fundamental_term(n: int) -> tuple:
    # [x1..x_{n-1},[y1..yn]] - sum_i [y1,..,[x1..x_{n-1},yi],..,yn]
    xs = [A(i) for i in range(n - 1)]
    ys = [A(n - 1 + i) for i in range(n)]
    parts = [N("nary", xs + [N("nary", ys)])]
    for i in range(n):
        inner = N("nary", xs + [ys[i]])
        args = [ys[j] if j != i else inner for j in range(n)]
        parts.append(SC(-1, N("nary", args)))
    return SUM(*parts)


_NARY: list[IdentitySpec] = [
    IdentitySpec(
        "tp-nlie", None, ("product", "nary"),
        "n z*[x1..xn] - sum_i [x1,..,z*xi,..,xn]",
        term_builder=_tp_nlie_term, nary_arity=lambda n: n + 1,
    ),
    IdentitySpec(
        "poisson-nlie", None, ("product", "nary"),
        "[x*y,z2..zn] - x*[y,z2..zn] - [x,z2..zn]*y",
        term_builder=_poisson_nlie_term, nary_arity=lambda n: n + 1,
    ),
    IdentitySpec(
        "nlie-fundamental", None, ("nary",),
        "[x1..x_{n-1},[y1..yn]] - sum_i [y1,..,[x1..x_{n-1},yi],..,yn]",
        term_builder=_nlie_fundamental_term, nary_arity=lambda n: 2 * n - 1,
    ),
]

CATALOG: dict[str, IdentitySpec] = {s.id: s for s in _FIXED + _NARY}


def catalog_table() -> list[dict]:
    """Catalog listing for documentation: id, arity, slots, definition."""
    rows = []
    for s in CATALOG.values():
        rows.append(
            {
                "id": s.id,
                "arity": s.arity if s.arity is not None else "n-dependent",
                "slots": list(s.slots),
                "definition": s.describe,
            }
        )
    return rows


# ---------------------------------------------------------------------------
# checker

def _resolve(spec_id: str, bindings: dict):
    if spec_id not in CATALOG:
        raise KeyError(f"unknown identity {spec_id!r}")
    spec = CATALOG[spec_id]
    bound = dict(bindings)
    dims = set()
    for slot in spec.slots:
        if slot == "unit":
            if "unit" not in bound:
                prod = bound.get("product")
                if prod is not None and getattr(prod, "unital", False):
                    bound["unit"] = prod.unit
            if "unit" not in bound:
                raise PreconditionError(f"{spec_id} requires a unit")
            continue
        if slot not in bound:
            raise PreconditionError(f"{spec_id}: missing slot {slot!r}")
    for v in bound.values():
        d = getattr(v, "dim", None)
        if d is not None:
            dims.add(d)
    if len(dims) > 1:
        raise DimensionError(f"slot dimensions disagree: {sorted(dims)}")
    if spec.arity is not None:
        return spec, bound, spec.arity, spec.term
    nary = bound.get("nary")
    if nary is None:
        raise PreconditionError(f"{spec_id}: missing slot 'nary'")
    n = nary.arity
    return spec, bound, spec.nary_arity(n), spec.term_builder(n)


def check_identity(spec_id: str, bindings: dict) -> CheckReport:
    """Evaluate the identity's defect on all basis tuples, in lex order."""
    spec, bound, arity, term = _resolve(spec_id, bindings)
    dim = next(
        getattr(v, "dim") for v in bound.values() if hasattr(v, "dim")
    )
    basis = [Element.basis(i, dim) for i in range(dim)]
    count = 0
    for idx in itertools.product(range(dim), repeat=arity):
        count += 1
        defect = eval_term(term, bound, [basis[i] for i in idx])
        if not defect.is_zero:
            return CheckReport(spec_id, False, count, idx, defect)
    return CheckReport(spec_id, True, count)


def evaluate_defect(spec_id: str, bindings: dict, args: list[Element]) -> Element:
    """Defect of one identity on explicit (not necessarily basis) arguments."""
    spec, bound, arity, term = _resolve(spec_id, bindings)
    if len(args) != arity:
        raise DimensionError(f"{spec_id} has arity {arity}, got {len(args)} args")
    return eval_term(term, bound, args)


# ---------------------------------------------------------------------------
# Jordan superalgebra criterion

def check_jordan_super(s: SuperAlgebra) -> CheckReport:
    """Graded commutativity plus the operator-form super Jordan identity.

    The operator identity
        (-1)^{|x||z|} [L_{x@y}, L_z]_s
      + (-1)^{|y||x|} [L_{y@z}, L_x]_s
      + (-1)^{|z||y|} [L_{z@x}, L_y]_s = 0
    is evaluated on every homogeneous basis quadruple, where L is left
    multiplication and [A,B]_s = AB - (-1)^{|A||B|} BA.
    """
    dim = s.dim
    basis = [Element.basis(i, dim) for i in range(dim)]
    mul = Algebra(dim, s.basis, s.table).product

    def sgn(p: int) -> Scalar:
        return Scalar(-1) if p % 2 else Scalar(1)

    count = 0
    for i in range(dim):
        for j in range(dim):
            count += 1
            d = mul(basis[i], basis[j]) - mul(
                basis[j], basis[i]
            ).scale(sgn(s.parity[i] * s.parity[j]))
            if not d.is_zero:
                return CheckReport(
                    "jordan-super", False, count, (i, j), d,
                    detail={"stage": "graded-commutativity"},
                )

    def super_comm(a: Element, pa: int, b: Element, pb: int, w: Element) -> Element:
        return mul(a, mul(b, w)) - mul(b, mul(a, w)).scale(sgn(pa * pb))

    for i, j, k, w in itertools.product(range(dim), repeat=4):
        count += 1
        px, py, pz = s.parity[i], s.parity[j], s.parity[k]
        ew = basis[w]
        xy = mul(basis[i], basis[j])
        yz = mul(basis[j], basis[k])
        zx = mul(basis[k], basis[i])
        d = (
            super_comm(xy, (px + py) % 2, basis[k], pz, ew).scale(sgn(px * pz))
            + super_comm(yz, (py + pz) % 2, basis[i], px, ew).scale(sgn(py * px))
            + super_comm(zx, (pz + px) % 2, basis[j], py, ew).scale(sgn(pz * py))
        )
        if not d.is_zero:
            return CheckReport(
                "jordan-super", False, count, (i, j, k, w), d,
                detail={"stage": "super-jordan"},
            )
    return CheckReport("jordan-super", True, count)
