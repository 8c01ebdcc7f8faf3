"""Exact solvers for spaces of maps cut out by linear identity constraints.

Every solver assembles a sparse linear system over the scalar field and
returns its nullspace as a ``SolutionSpace``.  Unknown orderings (fixed, and
relied on by serialization and tests):

* linear maps: u[(i, j)] is the coefficient of e_i in phi(e_j); column index
  is ``i * dim + j`` (lex order on (i, j));
* bilinear maps: u[(i, j, k)] is the coefficient of e_k in phi(e_i, e_j);
  column index is ``(i * dim + j) * dim + k`` (lex order on (i, j, k));
* commutative bilinear maps (``tp_product_space``): only pairs i <= j carry
  unknowns, enumerated in lex order on (i, j, k); the (j, i) entry is filled
  by symmetry when a vector is turned back into a map.

Equation rows are emitted in lex order over basis tuples, then output
coordinate.  Together with the deterministic elimination in ``linsolve`` this
makes solver output reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Algebra, BilinearMap, Element, LinearMap, NAryAlgebra
from .errors import PreconditionError
from .linsolve import ExactMatrix, nullspace
from .scalars import Scalar

__all__ = [
    "SolutionSpace",
    "delta_derivations",
    "nary_delta_derivations",
    "delta_biderivations",
    "hom_lie_maps",
    "tp_product_space",
    "filter_associative",
]


@dataclass(frozen=True)
class SolutionSpace:
    """Nullspace of a solver system, with its members decoded into maps."""

    kind: str                      # "linear" or "bilinear"
    dim: int                       # dimension of the underlying algebra
    unknowns: int
    basis: tuple                   # LinearMap or BilinearMap instances
    vectors: tuple                 # raw normalized nullspace vectors

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_dict(self):
        return {
            "kind": self.kind,
            "algebra_dim": self.dim,
            "unknowns": self.unknowns,
            "dimension": self.dimension,
            "basis": [
                [c.to_json() for c in vec] for vec in self.vectors
            ],
        }

    def _contains_vector(self, vec) -> bool:
        from .linsolve import rank as _rank

        def fill(m, col, v):
            for r, c in enumerate(v):
                if c:
                    m.set(r, col, c)

        base = ExactMatrix(self.unknowns, self.dimension)
        for col, v in enumerate(self.vectors):
            fill(base, col, v)
        extended = ExactMatrix(self.unknowns, self.dimension + 1)
        for col, v in enumerate(self.vectors):
            fill(extended, col, v)
        fill(extended, self.dimension, vec)
        return _rank(extended) == _rank(base)

    def contains_linear(self, phi: LinearMap) -> bool:
        """True when phi lies in the span of the solved space."""
        if self.kind != "linear":
            raise PreconditionError("contains_linear needs a linear space")
        d = self.dim
        vec = [phi.entry(i, j) for i in range(d) for j in range(d)]
        return self._contains_vector(vec)


# ---------------------------------------------------------------------------
# decoding

def _vec_to_linear(vec, dim: int) -> LinearMap:
    cols = [[vec[i * dim + j] for i in range(dim)] for j in range(dim)]
    return LinearMap(cols)


def _vec_to_bilinear(vec, dim: int) -> BilinearMap:
    table = {}
    for i in range(dim):
        for j in range(dim):
            sv = {
                k: vec[(i * dim + j) * dim + k]
                for k in range(dim)
                if vec[(i * dim + j) * dim + k]
            }
            if sv:
                table[(i, j)] = sv
    return BilinearMap(dim, table)


def _sym_cols(dim: int):
    """Column index for each (i, j, k) with i <= j, in lex order."""
    cols = {}
    for i in range(dim):
        for j in range(i, dim):
            for k in range(dim):
                cols[(i, j, k)] = len(cols)
    return cols


def _vec_to_sym_bilinear(vec, dim: int, cols) -> BilinearMap:
    table = {}
    for (i, j, k), c in cols.items():
        v = vec[c]
        if not v:
            continue
        table.setdefault((i, j), {})[k] = v
        if i != j:
            table.setdefault((j, i), {})[k] = v
    return BilinearMap(dim, table)


# ---------------------------------------------------------------------------
# solvers

def delta_derivations(a: Algebra, delta) -> SolutionSpace:
    """All phi with phi([x,y]) = delta([phi x, y] + [x, phi y])."""
    delta = Scalar.of(delta)
    dim = a.dim
    m = ExactMatrix(dim * dim * dim, dim * dim)
    row = 0
    for p, q in itertools.product(range(dim), repeat=2):
        bpq = a.basis_product(p, q)
        for r in range(dim):
            for k, c in bpq.items():
                m.add_to(row + r, r * dim + k, c)
        for i in range(dim):
            for k, c in a.basis_product(i, q).items():
                m.add_to(row + k, i * dim + p, -(delta * c))
            for k, c in a.basis_product(p, i).items():
                m.add_to(row + k, i * dim + q, -(delta * c))
        row += dim
    vecs = nullspace(m)
    return SolutionSpace(
        "linear", dim, dim * dim,
        tuple(_vec_to_linear(v, dim) for v in vecs), tuple(vecs),
    )


def nary_delta_derivations(a: NAryAlgebra, delta) -> SolutionSpace:
    """All phi with phi([x1..xn]) = delta * sum_i [x1,..,phi xi,..,xn]."""
    delta = Scalar.of(delta)
    dim, n = a.dim, a.arity
    m = ExactMatrix(dim ** n * dim, dim * dim)
    row = 0
    for idx in itertools.product(range(dim), repeat=n):
        bidx = a.basis_apply(idx)
        for r in range(dim):
            for k, c in bidx.items():
                m.add_to(row + r, r * dim + k, c)
        for pos in range(n):
            for i in range(dim):
                sub = list(idx)
                sub[pos] = i
                for k, c in a.basis_apply(tuple(sub)).items():
                    m.add_to(row + k, i * dim + idx[pos], -(delta * c))
        row += dim
    vecs = nullspace(m)
    return SolutionSpace(
        "linear", dim, dim * dim,
        tuple(_vec_to_linear(v, dim) for v in vecs), tuple(vecs),
    )


def delta_biderivations(a: Algebra, delta) -> SolutionSpace:
    """Bilinear phi satisfying the two one-sided delta-derivation laws.

        phi([x,y], z) = delta([phi(x,z), y] + [x, phi(y,z)])
        phi(x, [y,z]) = delta([phi(x,y), z] + [y, phi(x,z)])
    """
    delta = Scalar.of(delta)
    dim = a.dim
    col = lambda i, j, k: (i * dim + j) * dim + k
    m = ExactMatrix(2 * dim ** 4, dim ** 3)
    row = 0
    for p, q, s in itertools.product(range(dim), repeat=3):
        # first law on (e_p, e_q, e_s)
        for k, c in a.basis_product(p, q).items():
            for r in range(dim):
                m.add_to(row + r, col(k, s, r), c)
        for k in range(dim):
            for r, c in a.basis_product(k, q).items():
                m.add_to(row + r, col(p, s, k), -(delta * c))
            for r, c in a.basis_product(p, k).items():
                m.add_to(row + r, col(q, s, k), -(delta * c))
        row += dim
        # second law on (e_p, e_q, e_s)
        for k, c in a.basis_product(q, s).items():
            for r in range(dim):
                m.add_to(row + r, col(p, k, r), c)
        for k in range(dim):
            for r, c in a.basis_product(k, s).items():
                m.add_to(row + r, col(p, q, k), -(delta * c))
            for r, c in a.basis_product(q, k).items():
                m.add_to(row + r, col(p, s, k), -(delta * c))
        row += dim
    vecs = nullspace(m)
    return SolutionSpace(
        "bilinear", dim, dim ** 3,
        tuple(_vec_to_bilinear(v, dim) for v in vecs), tuple(vecs),
    )


def hom_lie_maps(a: Algebra) -> SolutionSpace:
    """All phi with [phi(x),[y,z]] + [phi(y),[z,x]] + [phi(z),[x,y]] = 0."""
    dim = a.dim
    m = ExactMatrix(dim ** 3 * dim, dim * dim)
    row = 0
    for p, q, s in itertools.product(range(dim), repeat=3):
        for first, inner in ((p, (q, s)), (q, (s, p)), (s, (p, q))):
            for k, c in a.basis_product(*inner).items():
                for i in range(dim):
                    for r, c2 in a.basis_product(i, k).items():
                        m.add_to(row + r, i * dim + first, c * c2)
        row += dim
    vecs = nullspace(m)
    return SolutionSpace(
        "linear", dim, dim * dim,
        tuple(_vec_to_linear(v, dim) for v in vecs), tuple(vecs),
    )


def tp_product_space(a: Algebra) -> SolutionSpace:
    """Commutative bilinear products compatible with the bracket of ``a``.

    Solves 2 z*[x,y] = [z*x, y] + [x, z*y] for the product structure
    constants; commutativity is built into the unknowns.  Associativity is
    not linear in the unknowns, so it is not imposed here; see
    ``filter_associative``.
    """
    dim = a.dim
    cols = _sym_cols(dim)

    def col(i, j, k):
        return cols[(min(i, j), max(i, j), k)]

    m = ExactMatrix(dim ** 3 * dim, len(cols))
    row = 0
    for p, q, s in itertools.product(range(dim), repeat=3):
        for k, c in a.basis_product(p, q).items():
            for r in range(dim):
                m.add_to(row + r, col(s, k, r), Scalar(2) * c)
        for k in range(dim):
            for r, c in a.basis_product(k, q).items():
                m.add_to(row + r, col(s, p, k), -c)
            for r, c in a.basis_product(p, k).items():
                m.add_to(row + r, col(s, q, k), -c)
        row += dim
    vecs = nullspace(m)
    return SolutionSpace(
        "bilinear", dim, len(cols),
        tuple(_vec_to_sym_bilinear(v, dim, cols) for v in vecs), tuple(vecs),
    )


def filter_associative(maps) -> list[BilinearMap]:
    """Keep the bilinear maps whose induced algebra is associative.

    Associativity is quadratic in the structure constants, so membership in
    an associative family cannot be read off a nullspace; candidates are
    checked individually instead.
    """
    out = []
    for bm in maps:
        if not isinstance(bm, BilinearMap):
            raise PreconditionError("filter_associative expects BilinearMaps")
        alg = bm.as_algebra()
        ok = True
        for i, j, k in itertools.product(range(bm.dim), repeat=3):
            ei, ej, ek = (
                Element.basis(i, bm.dim),
                Element.basis(j, bm.dim),
                Element.basis(k, bm.dim),
            )
            if alg.product(alg.product(ei, ej), ek) != alg.product(
                ei, alg.product(ej, ek)
            ):
                ok = False
                break
        if ok:
            out.append(bm)
    return out
