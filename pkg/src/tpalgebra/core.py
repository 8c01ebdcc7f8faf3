"""Structure-constant algebras, elements, linear/bilinear maps, superalgebras.

Tables are stored sparsely as ``(i, j) -> {k: coefficient}``; elements carry
dense coordinate vectors.  Everything is immutable after construction and all
operations are pure.
"""

from __future__ import annotations

import itertools

from . import linsolve
from .errors import DimensionError, TableError
from .scalars import ONE, Scalar

Coords = tuple[Scalar, ...]


def _svec(pairs) -> dict[int, Scalar]:
    out = {}
    for k, c in pairs:
        c = Scalar.of(c)
        if c:
            out[k] = out.get(k, Scalar(0)) + c
            if not out[k]:
                del out[k]
    return out


class Element:
    """Coordinate vector in a fixed basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords: Coords = tuple(Scalar.of(c) for c in coords)

    @staticmethod
    def basis(i: int, dim: int) -> "Element":
        return Element(tuple(ONE if j == i else Scalar(0) for j in range(dim)))

    @staticmethod
    def zero(dim: int) -> "Element":
        return Element((Scalar(0),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Element") -> "Element":
        if self.dim != other.dim:
            raise DimensionError("element dimensions differ")
        return Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        if self.dim != other.dim:
            raise DimensionError("element dimensions differ")
        return Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coords))

    def scale(self, c) -> "Element":
        c = Scalar.of(c)
        return Element(tuple(c * a for a in self.coords))

    def __eq__(self, other):
        return isinstance(other, Element) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Element({[str(c) for c in self.coords]})"


class Algebra:
    """Finite-dimensional algebra with one binary product."""

    __slots__ = ("dim", "basis", "table", "unital", "unit")

    def __init__(self, dim, basis, table, unital=False, unit=None):
        self.dim = dim
        self.basis = tuple(basis) if basis else tuple(f"e{i}" for i in range(dim))
        if len(self.basis) != dim:
            raise TableError("basis label count != dim")
        tbl: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), vec in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise TableError(f"index ({i},{j}) out of range")
            sv = _svec(vec.items() if isinstance(vec, dict) else vec)
            for k in sv:
                if not 0 <= k < dim:
                    raise TableError(f"output index {k} out of range")
            if sv:
                tbl[(i, j)] = sv
        self.table = tbl
        self.unital = bool(unital)
        self.unit = Element(unit) if unit is not None else None
        if self.unital:
            if self.unit is None:
                raise TableError("unital flag set without unit coordinates")
            for j in range(dim):
                ej = Element.basis(j, dim)
                if self.product(self.unit, ej) != ej or self.product(ej, self.unit) != ej:
                    raise TableError(f"unit axiom fails on basis element {j}")

    def basis_product(self, i: int, j: int) -> dict[int, Scalar]:
        return self.table.get((i, j), {})

    def product(self, x: Element, y: Element) -> Element:
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionError("element dimension != algebra dimension")
        acc = [Scalar(0)] * self.dim
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            for j, yj in enumerate(y.coords):
                if not yj:
                    continue
                sv = self.table.get((i, j))
                if not sv:
                    continue
                c = xi * yj
                for k, v in sv.items():
                    acc[k] = acc[k] + c * v
        return Element(acc)

    # -- serialization -------------------------------------------------

    def table_json(self):
        return [
            [i, j, [[k, sv[k].to_json()] for k in sorted(sv)]]
            for (i, j), sv in sorted(self.table.items())
        ]

    def to_dict(self, product_name="product"):
        d = {
            "dim": self.dim,
            "basis": list(self.basis),
            "products": {product_name: self.table_json()},
            "unital": self.unital,
        }
        if self.unit is not None:
            d["unit"] = [c.to_json() for c in self.unit.coords]
        return d

    @staticmethod
    def from_dict(d, product_name=None) -> "Algebra":
        names = sorted(d["products"])
        if product_name is None:
            if len(names) != 1:
                raise TableError(f"choose one of products {names}")
            product_name = names[0]
        entries = d["products"][product_name]
        table = {}
        for entry in entries:
            *idx, vec = entry
            if len(idx) != 2:
                raise TableError("binary product entries need two index slots")
            table[(idx[0], idx[1])] = [(k, Scalar.parse(c)) for k, c in vec]
        return Algebra(
            d["dim"],
            d.get("basis"),
            table,
            unital=d.get("unital", False),
            unit=[Scalar.parse(c) for c in d["unit"]] if d.get("unit") else None,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.dim == other.dim
            and self.table == other.table
            and self.unital == other.unital
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted((ij, tuple(sorted(sv.items()))) for ij, sv in self.table.items()))))


def make_algebra(dim, table, basis=None, unital=False, unit=None) -> Algebra:
    """Validated constructor; see Algebra for the table shape."""
    return Algebra(dim, basis, table, unital=unital, unit=unit)


def multiply(a: Algebra, x: Element, y: Element) -> Element:
    return a.product(x, y)


class NAryAlgebra:
    """Finite-dimensional algebra with one m-ary multilinear product."""

    __slots__ = ("dim", "arity", "basis", "table")

    def __init__(self, dim, arity, table, basis=None):
        if arity < 2:
            raise TableError("arity must be >= 2")
        self.dim = dim
        self.arity = arity
        self.basis = tuple(basis) if basis else tuple(f"e{i}" for i in range(dim))
        tbl = {}
        for idx, vec in table.items():
            idx = tuple(idx)
            if len(idx) != arity:
                raise TableError("index tuple length != arity")
            if any(not 0 <= i < dim for i in idx):
                raise TableError(f"index {idx} out of range")
            sv = _svec(vec.items() if isinstance(vec, dict) else vec)
            for k in sv:
                if not 0 <= k < dim:
                    raise TableError(f"output index {k} out of range")
            if sv:
                tbl[idx] = sv
        self.table = tbl

    def basis_apply(self, idx: tuple[int, ...]) -> dict[int, Scalar]:
        return self.table.get(tuple(idx), {})

    def apply(self, args: list[Element]) -> Element:
        if len(args) != self.arity:
            raise DimensionError("argument count != arity")
        for x in args:
            if x.dim != self.dim:
                raise DimensionError("element dimension != algebra dimension")
        acc = [Scalar(0)] * self.dim
        supports = [
            [(i, c) for i, c in enumerate(x.coords) if c] for x in args
        ]
        for combo in itertools.product(*supports):
            idx = tuple(i for i, _ in combo)
            sv = self.table.get(idx)
            if not sv:
                continue
            coef = combo[0][1]
            for _, c in combo[1:]:
                coef = coef * c
            for k, v in sv.items():
                acc[k] = acc[k] + coef * v
        return Element(acc)

    def is_antisymmetric(self) -> bool:
        """Total antisymmetry under adjacent transpositions, checked on demand."""
        for idx, sv in self.table.items():
            if len(set(idx)) < len(idx):
                return False
        for idx in itertools.product(range(self.dim), repeat=self.arity):
            base = self.table.get(idx, {})
            for t in range(self.arity - 1):
                swapped = list(idx)
                swapped[t], swapped[t + 1] = swapped[t + 1], swapped[t]
                other = self.table.get(tuple(swapped), {})
                if base != {k: -c for k, c in other.items()}:
                    return False
        return True

    def to_dict(self, product_name="bracket"):
        entries = [
            [*idx, [[k, sv[k].to_json()] for k in sorted(sv)]]
            for idx, sv in sorted(self.table.items())
        ]
        return {
            "dim": self.dim,
            "arity": self.arity,
            "basis": list(self.basis),
            "products": {product_name: entries},
            "unital": False,
        }

    @staticmethod
    def from_dict(d, product_name=None) -> "NAryAlgebra":
        names = sorted(d["products"])
        if product_name is None:
            product_name = names[0]
        arity = d["arity"]
        table = {}
        for entry in d["products"][product_name]:
            idx, vec = tuple(entry[:-1]), entry[-1]
            table[idx] = [(k, Scalar.parse(c)) for k, c in vec]
        return NAryAlgebra(d["dim"], arity, table, d.get("basis"))

    def __eq__(self, other):
        return (
            isinstance(other, NAryAlgebra)
            and (self.dim, self.arity) == (other.dim, other.arity)
            and self.table == other.table
        )


def nary_apply(a: NAryAlgebra, args) -> Element:
    return a.apply(list(args))


class LinearMap:
    """Square matrix of Scalars; column j is the image of basis element j."""

    __slots__ = ("dim", "cols")

    def __init__(self, cols):
        self.cols: tuple[Coords, ...] = tuple(
            tuple(Scalar.of(c) for c in col) for col in cols
        )
        self.dim = len(self.cols)
        for col in self.cols:
            if len(col) != self.dim:
                raise DimensionError("linear map must be square")

    @staticmethod
    def identity(dim: int) -> "LinearMap":
        return LinearMap(
            [[ONE if i == j else Scalar(0) for i in range(dim)] for j in range(dim)]
        )

    @staticmethod
    def zero(dim: int) -> "LinearMap":
        return LinearMap([[Scalar(0)] * dim for _ in range(dim)])

    @staticmethod
    def from_images(images: list[Element]) -> "LinearMap":
        return LinearMap([img.coords for img in images])

    def apply(self, x: Element) -> Element:
        if x.dim != self.dim:
            raise DimensionError("element dimension != map dimension")
        acc = [Scalar(0)] * self.dim
        for j, xj in enumerate(x.coords):
            if not xj:
                continue
            for i, c in enumerate(self.cols[j]):
                if c:
                    acc[i] = acc[i] + xj * c
        return Element(acc)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap([self.apply(Element(col)).coords for col in other.cols])

    def inverse(self) -> "LinearMap | None":
        cols = linsolve.invert([list(col) for col in self.cols])
        return LinearMap(cols) if cols is not None else None

    def entry(self, i: int, j: int) -> Scalar:
        return self.cols[j][i]

    def scale(self, c) -> "LinearMap":
        c = Scalar.of(c)
        return LinearMap([[c * v for v in col] for col in self.cols])

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(
            [
                [a + b for a, b in zip(c1, c2)]
                for c1, c2 in zip(self.cols, other.cols)
            ]
        )

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)

    def to_json(self):
        return [[c.to_json() for c in col] for col in self.cols]

    @staticmethod
    def from_json(obj) -> "LinearMap":
        return LinearMap([[Scalar.parse(c) for c in col] for col in obj])

    def is_derivation_of(self, a: Algebra) -> tuple[bool, tuple[int, int] | None]:
        """Leibniz law on all basis pairs; returns (ok, first failing pair)."""
        for i in range(a.dim):
            for j in range(a.dim):
                ei, ej = Element.basis(i, a.dim), Element.basis(j, a.dim)
                lhs = self.apply(a.product(ei, ej))
                rhs = a.product(self.apply(ei), ej) + a.product(ei, self.apply(ej))
                if lhs != rhs:
                    return False, (i, j)
        return True, None


class BilinearMap:
    """3-tensor c[i][j] -> sparse output vector; acts on pairs of Elements."""

    __slots__ = ("dim", "table")

    def __init__(self, dim, table):
        self.dim = dim
        tbl = {}
        for (i, j), vec in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise TableError(f"index ({i},{j}) out of range")
            sv = _svec(vec.items() if isinstance(vec, dict) else vec)
            if sv:
                tbl[(i, j)] = sv
        self.table = tbl

    def apply(self, x: Element, y: Element) -> Element:
        return self.as_algebra().product(x, y)

    def as_algebra(self, basis=None) -> Algebra:
        return Algebra(self.dim, basis, self.table)

    def is_symmetric(self) -> bool:
        for (i, j), sv in self.table.items():
            if self.table.get((j, i), {}) != sv:
                return False
        return True

    def entry(self, i, j, k) -> Scalar:
        return self.table.get((i, j), {}).get(k, Scalar(0))

    def __eq__(self, other):
        return (
            isinstance(other, BilinearMap)
            and self.dim == other.dim
            and self.table == other.table
        )

    def to_json(self):
        return [
            [i, j, [[k, sv[k].to_json()] for k in sorted(sv)]]
            for (i, j), sv in sorted(self.table.items())
        ]


class SuperAlgebra:
    """Z2-graded algebra: parity vector plus a parity-homogeneous table."""

    __slots__ = ("dim", "parity", "basis", "table")

    def __init__(self, dim, parity, table, basis=None):
        self.dim = dim
        self.parity = tuple(int(p) % 2 for p in parity)
        if len(self.parity) != dim:
            raise TableError("parity vector length != dim")
        self.basis = tuple(basis) if basis else tuple(f"e{i}" for i in range(dim))
        tbl = {}
        for (i, j), vec in table.items():
            sv = _svec(vec.items() if isinstance(vec, dict) else vec)
            want = (self.parity[i] + self.parity[j]) % 2
            for k in sv:
                if self.parity[k] != want:
                    raise TableError(
                        f"product of parities {self.parity[i]},{self.parity[j]} "
                        f"hits parity-{self.parity[k]} element {k}"
                    )
            if sv:
                tbl[(i, j)] = sv
        self.table = tbl

    def basis_product(self, i, j) -> dict[int, Scalar]:
        return self.table.get((i, j), {})

    def product(self, x: Element, y: Element) -> Element:
        return Algebra(self.dim, self.basis, self.table).product(x, y)

    def to_dict(self):
        d = Algebra(self.dim, self.basis, self.table).to_dict("super_product")
        d["parity"] = list(self.parity)
        return d
