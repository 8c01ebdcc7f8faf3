"""Shared fixtures and the independent dense-elimination oracle.

The oracle deliberately avoids the package's sparse linear algebra: equation
matrices are built by plugging elementary basis maps into the defining law
and evaluating the defect, then reduced with a plain dense Gaussian
elimination over Fractions.  Solver results are cross-checked against it.
"""

import itertools
from fractions import Fraction

import pytest

from tpalgebra import Algebra, BilinearMap, Element, LinearMap
from tpalgebra.constructions import tp_pair_from_derivation
from tpalgebra.models import named_algebra, named_derivation
from tpalgebra.scalars import Scalar


# ---------------------------------------------------------------------------
# dense oracle

def dense_nullity(rows):
    """Nullity of a dense rational matrix via plain Gaussian elimination."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next(
            (r for r in range(rank, len(rows)) if rows[r][col] != 0), None
        )
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][col] if isinstance(
            rows[rank][col], Fraction
        ) else 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return ncols - rank


def _defect_columns(dim, make_defect, n_unknowns, elementary):
    """Matrix whose column u is the stacked defect of elementary map u.

    Equations that are identically zero across all unknowns are dropped
    before the dense elimination; that only removes 0 = 0 rows.
    """
    columns = [make_defect(elementary(u)) for u in range(n_unknowns)]
    support = sorted(
        {r for col in columns for r, v in enumerate(col) if v != 0}
    )
    if not support:
        return [[Fraction(0)] * n_unknowns]  # vacuous law: everything solves
    return [[columns[u][r] for u in range(n_unknowns)] for r in support]


def _scal(c: Scalar) -> Fraction:
    assert c.im == 0, "oracle only handles rational structure constants"
    return c.re


def oracle_linear_dimension(alg: Algebra, law) -> int:
    """Solution dimension for a law linear in a LinearMap unknown.

    ``law(phi)`` returns a list of defect Elements; superposition gives the
    equation matrix column by column from elementary matrix units.
    """
    dim = alg.dim

    def elementary(u):
        i, j = divmod(u, dim)
        cols = [[Scalar(0)] * dim for _ in range(dim)]
        cols[j][i] = Scalar(1)
        return LinearMap(cols)

    def make_defect(phi):
        out = []
        for el in law(phi):
            out.extend(_scal(c) for c in el.coords)
        return out

    rows = _defect_columns(dim, make_defect, dim * dim, elementary)
    return dense_nullity(rows)


def oracle_bilinear_dimension(alg: Algebra, law, symmetric=False) -> int:
    """Solution dimension for a law linear in a BilinearMap unknown."""
    dim = alg.dim
    if symmetric:
        keys = [
            (i, j, k)
            for i in range(dim)
            for j in range(i, dim)
            for k in range(dim)
        ]
    else:
        keys = list(itertools.product(range(dim), repeat=3))

    def elementary(u):
        i, j, k = keys[u]
        table = {(i, j): {k: Scalar(1)}}
        if symmetric and i != j:
            table[(j, i)] = {k: Scalar(1)}
        return BilinearMap(dim, table)

    def make_defect(phi):
        out = []
        for el in law(phi):
            out.extend(_scal(c) for c in el.coords)
        return out

    rows = _defect_columns(dim, make_defect, len(keys), elementary)
    return dense_nullity(rows)


# ---------------------------------------------------------------------------
# fixtures

@pytest.fixture(scope="session")
def sl2():
    return named_algebra("sl2")


@pytest.fixture(scope="session")
def heis3():
    return named_algebra("heis3")


@pytest.fixture(scope="session")
def trunc3_pair():
    return tp_pair_from_derivation(
        named_algebra("poly-trunc-3"), named_derivation("poly-trunc-3")
    )


@pytest.fixture(scope="session")
def trunc4_pair():
    return tp_pair_from_derivation(
        named_algebra("poly-trunc-4"), named_derivation("poly-trunc-4")
    )


def basis_elements(dim):
    return [Element.basis(i, dim) for i in range(dim)]
