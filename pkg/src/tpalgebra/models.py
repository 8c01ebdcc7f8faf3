"""Model catalog: oscillator algebras with their 1/2-derivations, transposed
Poisson products, automorphisms and classification families, plus small named
algebras used throughout the tests and the CLI.

Oscillator basis order is fixed as (e_{-1}, e_0, e_1..e_n, f_1..f_n), where
f_j denotes the "checked" partner of e_j; products are indexed accordingly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .constructions import TPPair
from .core import Algebra, Element, LinearMap
from .errors import PreconditionError
from .linsolve import ExactMatrix, rank
from .scalars import ONE, Scalar

__all__ = [
    "OscillatorParams",
    "HalfDerParams",
    "AutomorphismParams",
    "ClassificationFamily",
    "oscillator",
    "oscillator_half_derivation",
    "oscillator_tp_product",
    "oscillator_tp_pair",
    "oscillator_automorphism",
    "canonical_tp_product",
    "canonical_tp_pair",
    "apply_basis_change",
    "product_is_nilpotent",
    "named_algebra",
    "named_derivation",
    "CATALOG_IDS",
]


# ---------------------------------------------------------------------------
# parameter types

@dataclass(frozen=True)
class OscillatorParams:
    n: int
    lam: tuple
    generic: bool = False

    def __post_init__(self):
        lam = tuple(Scalar.of(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if self.n < 1 or len(lam) != self.n:
            raise PreconditionError("lambda length must equal n >= 1")
        for x in lam:
            if x.im or x.re <= 0:
                raise PreconditionError("lambda entries must be positive rationals")
        for a, b in zip(lam, lam[1:]):
            if b.re < a.re:
                raise PreconditionError("lambda must be ascending")
        if self.generic:
            if lam[0] != ONE:
                raise PreconditionError("generic requires lambda_1 = 1")
            for a, b in zip(lam, lam[1:]):
                if b.re <= a.re:
                    raise PreconditionError("generic requires strict increase")
            for i, j, k in itertools.combinations(range(self.n), 3):
                if lam[i] + lam[j] == lam[k]:
                    raise PreconditionError(
                        "generic forbids lambda_i + lambda_j = lambda_k"
                    )

    @property
    def dim(self) -> int:
        return 2 * self.n + 2


@dataclass(frozen=True)
class HalfDerParams:
    gamma: Scalar = Scalar(0)
    mu: Scalar = Scalar(0)
    alpha: tuple = ()
    beta: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gamma", Scalar.of(self.gamma))
        object.__setattr__(self, "mu", Scalar.of(self.mu))
        object.__setattr__(self, "alpha", tuple(Scalar.of(x) for x in self.alpha))
        object.__setattr__(self, "beta", tuple(Scalar.of(x) for x in self.beta))

    def check_length(self, n: int):
        if len(self.alpha) != n or len(self.beta) != n:
            raise PreconditionError("alpha/beta length must equal n")


@dataclass(frozen=True)
class AutomorphismParams:
    sign: int
    nu: Scalar = Scalar(0)
    nus: tuple = ()
    nuchecks: tuple = ()
    mus: tuple = ()
    muchecks: tuple = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PreconditionError("sign must be +1 or -1")
        object.__setattr__(self, "nu", Scalar.of(self.nu))
        for name in ("nus", "nuchecks", "mus", "muchecks"):
            object.__setattr__(
                self, name, tuple(Scalar.of(x) for x in getattr(self, name))
            )
        n = len(self.mus)
        if not (len(self.muchecks) == len(self.nus) == len(self.nuchecks) == n):
            raise PreconditionError("parameter tuples must share one length")
        xis = {
            self.mus[i] * self.mus[i] + self.muchecks[i] * self.muchecks[i]
            for i in range(n)
        }
        if len(xis) > 1:
            raise PreconditionError("mu_i^2 + mucheck_i^2 must not depend on i")
        if n and not next(iter(xis)):
            raise PreconditionError("mu_i^2 + mucheck_i^2 must be nonzero")

    @property
    def xi(self) -> Scalar:
        if not self.mus:
            return ONE
        return self.mus[0] * self.mus[0] + self.muchecks[0] * self.muchecks[0]


def _in_c_pos(z: Scalar) -> bool:
    """Membership in {a+bi : a > 0} union {bi : b >= 0}."""
    return z.re > 0 or (z.re == 0 and z.im >= 0)


@dataclass(frozen=True)
class ClassificationFamily:
    tag: str                       # "A", "B.a" or "B.b"
    gamma: Scalar = Scalar(0)      # family A only
    beta: tuple = ()               # B families only

    def __post_init__(self):
        object.__setattr__(self, "gamma", Scalar.of(self.gamma))
        object.__setattr__(self, "beta", tuple(Scalar.of(x) for x in self.beta))
        if self.tag == "A":
            if not self.gamma:
                raise PreconditionError("family A needs gamma != 0")
        elif self.tag in ("B.a", "B.b"):
            seen_nonzero = False
            for b in self.beta:
                if not b:
                    continue
                if not _in_c_pos(b):
                    raise PreconditionError(
                        "beta entries must lie in the right half-plane "
                        "or the nonnegative imaginary axis"
                    )
                if not seen_nonzero and b != ONE:
                    raise PreconditionError("first nonzero beta must be 1")
                seen_nonzero = True
        else:
            raise PreconditionError(f"unknown family tag {self.tag!r}")


# ---------------------------------------------------------------------------
# oscillator Lie algebra and its structures

def oscillator(p: OscillatorParams) -> Algebra:
    """The (2n+2)-dimensional oscillator Lie algebra.

    Bracket: [e_{-1}, e_j] = lam_j f_j, [e_{-1}, f_j] = -lam_j e_j,
    [e_j, f_j] = e_0; basis order (e_{-1}, e_0, e_1..e_n, f_1..f_n).
    """
    n = p.n
    table = {}

    def anti(i, j, sv):
        table[(i, j)] = sv
        table[(j, i)] = {k: -c for k, c in sv.items()}

    for j in range(n):
        ej, fj = 2 + j, 2 + n + j
        anti(0, ej, {fj: p.lam[j]})
        anti(0, fj, {ej: -p.lam[j]})
        anti(ej, fj, {1: ONE})
    basis = (
        ["e-1", "e0"]
        + [f"e{j + 1}" for j in range(n)]
        + [f"f{j + 1}" for j in range(n)]
    )
    return Algebra(p.dim, basis, table)


def oscillator_half_derivation(p: OscillatorParams, h: HalfDerParams) -> LinearMap:
    """The general 1/2-derivation with parameters (gamma, mu, alpha, beta)."""
    h.check_length(p.n)
    n, dim = p.n, p.dim
    g = h.gamma
    cols = []
    # image of e_{-1}
    c = [Scalar(0)] * dim
    c[0], c[1] = g, h.mu
    for j in range(n):
        c[2 + j] = -(Scalar(2) * p.lam[j] * h.alpha[j])
        c[2 + n + j] = -(Scalar(2) * p.lam[j] * h.beta[j])
    cols.append(c)
    # image of e_0
    c = [Scalar(0)] * dim
    c[1] = g
    cols.append(c)
    # images of e_j and f_j
    for j in range(n):
        c = [Scalar(0)] * dim
        c[1], c[2 + j] = h.alpha[j], g
        cols.append(c)
    for j in range(n):
        c = [Scalar(0)] * dim
        c[1], c[2 + n + j] = h.beta[j], g
        cols.append(c)
    return LinearMap(cols)


def oscillator_tp_product(p: OscillatorParams, h: HalfDerParams) -> Algebra:
    """The commutative product paired with the oscillator bracket.

    e_{-1}.e_{-1} = gamma e_{-1} + mu e_0 - 2 sum_k lam_k(alpha_k e_k
    + beta_k f_k); e_{-1}.e_0 = gamma e_0; e_{-1}.e_j = alpha_j e_0
    + gamma e_j; e_{-1}.f_j = beta_j e_0 + gamma f_j;
    e_j.e_j = f_j.f_j = -gamma/(2 lam_j) e_0; all other products zero.
    """
    h.check_length(p.n)
    n, dim, g = p.n, p.dim, h.gamma
    table = {}

    def sym(i, j, sv):
        sv = {k: c for k, c in sv.items() if c}
        if not sv:
            return
        table[(i, j)] = sv
        if i != j:
            table[(j, i)] = dict(sv)

    head = {0: g, 1: h.mu}
    for k in range(n):
        head[2 + k] = -(Scalar(2) * p.lam[k] * h.alpha[k])
        head[2 + n + k] = -(Scalar(2) * p.lam[k] * h.beta[k])
    sym(0, 0, head)
    sym(0, 1, {1: g})
    for j in range(n):
        sym(0, 2 + j, {1: h.alpha[j], 2 + j: g})
        sym(0, 2 + n + j, {1: h.beta[j], 2 + n + j: g})
        diag = -(g / (Scalar(2) * p.lam[j]))
        sym(2 + j, 2 + j, {1: diag})
        sym(2 + n + j, 2 + n + j, {1: diag})
    basis = oscillator(p).basis
    return Algebra(dim, basis, table)


def oscillator_tp_pair(p: OscillatorParams, h: HalfDerParams) -> TPPair:
    return TPPair(oscillator_tp_product(p, h), oscillator(p))


def oscillator_automorphism(p: OscillatorParams, a: AutomorphismParams) -> LinearMap:
    """Automorphism of the oscillator algebra from its parameter family.

    With s = sign and xi = mu_i^2 + mucheck_i^2 (constant in i):
        e_{-1} -> s e_{-1} + nu e_0 + sum_i(nu_i e_i + nucheck_i f_i)
        e_0    -> s xi e_0
        e_i    -> a_i e_0 + mu_i e_i - s mucheck_i f_i
        f_i    -> b_i e_0 + mucheck_i e_i + s mu_i f_i
    where a_i = (nucheck_i mucheck_i - s nu_i mu_i)/lam_i and
    b_i = (-s nu_i mucheck_i - nucheck_i mu_i)/lam_i.  Bracket preservation
    is re-verified on all basis pairs.
    """
    if len(a.mus) != p.n:
        raise PreconditionError("parameter tuples must have length n")
    n, dim = p.n, p.dim
    s = Scalar(a.sign)
    cols = []
    c = [Scalar(0)] * dim
    c[0], c[1] = s, a.nu
    for i in range(n):
        c[2 + i] = a.nus[i]
        c[2 + n + i] = a.nuchecks[i]
    cols.append(c)
    c = [Scalar(0)] * dim
    c[1] = s * a.xi
    cols.append(c)
    for i in range(n):
        ai = (a.nuchecks[i] * a.muchecks[i] - s * a.nus[i] * a.mus[i]) / p.lam[i]
        c = [Scalar(0)] * dim
        c[1], c[2 + i], c[2 + n + i] = ai, a.mus[i], -(s * a.muchecks[i])
        cols.append(c)
    for i in range(n):
        bi = (-(s * a.nus[i] * a.muchecks[i]) - a.nuchecks[i] * a.mus[i]) / p.lam[i]
        c = [Scalar(0)] * dim
        c[1], c[2 + i], c[2 + n + i] = bi, a.muchecks[i], s * a.mus[i]
        cols.append(c)
    phi = LinearMap(cols)
    alg = oscillator(p)
    for i in range(dim):
        for j in range(dim):
            ei, ej = Element.basis(i, dim), Element.basis(j, dim)
            if phi.apply(alg.product(ei, ej)) != alg.product(
                phi.apply(ei), phi.apply(ej)
            ):
                raise PreconditionError(
                    f"bracket preservation fails on basis pair ({i},{j})"
                )
    if phi.inverse() is None:
        raise PreconditionError("automorphism parameters give a singular map")
    return phi


# ---------------------------------------------------------------------------
# classification families

def _family_halfder(p: OscillatorParams, f: ClassificationFamily) -> HalfDerParams:
    zeros = (Scalar(0),) * p.n
    if f.tag == "A":
        return HalfDerParams(f.gamma, Scalar(0), zeros, zeros)
    beta = f.beta if f.beta else zeros
    if len(beta) != p.n:
        raise PreconditionError("beta length must equal n")
    mu = ONE if f.tag == "B.a" else Scalar(0)
    return HalfDerParams(Scalar(0), mu, zeros, beta)


def canonical_tp_product(p: OscillatorParams, f: ClassificationFamily) -> Algebra:
    """Canonical representative product for a classification family.

    Family A is the gamma-scaled product (non-nilpotent); families B.a and
    B.b are the nilpotent mu/beta products.  Requires generic parameters.
    """
    if not p.generic:
        raise PreconditionError("classification requires generic parameters")
    return oscillator_tp_product(p, _family_halfder(p, f))


def canonical_tp_pair(p: OscillatorParams, f: ClassificationFamily) -> TPPair:
    return TPPair(canonical_tp_product(p, f), oscillator(p))


def apply_basis_change(pair: TPPair, phi: LinearMap) -> TPPair:
    """Transport both operations through an invertible map.

    The result makes phi an isomorphism from the input pair onto it:
    x . y = phi(phi^{-1}(x) . phi^{-1}(y)) for either operation.
    """
    inv = phi.inverse()
    if inv is None:
        raise PreconditionError("basis change must be invertible")
    dim = pair.dim

    def transport(alg: Algebra) -> Algebra:
        table = {}
        for i in range(dim):
            for j in range(dim):
                v = phi.apply(
                    alg.product(
                        inv.apply(Element.basis(i, dim)),
                        inv.apply(Element.basis(j, dim)),
                    )
                )
                if not v.is_zero:
                    table[(i, j)] = {k: c for k, c in enumerate(v.coords) if c}
        if alg.unital:
            unit = list(phi.apply(alg.unit).coords)
            return Algebra(dim, alg.basis, table, unital=True, unit=unit)
        return Algebra(dim, alg.basis, table)

    return TPPair(transport(pair.product), transport(pair.bracket))


def product_is_nilpotent(a: Algebra, max_steps: int | None = None) -> bool:
    """Decide nilpotency of the product by iterating the power span A^{k+1}
    = A . A^k until it vanishes or stabilizes."""
    dim = a.dim
    span = [Element.basis(i, dim) for i in range(dim)]
    steps = max_steps if max_steps is not None else dim + 1
    prev_rank = None
    for _ in range(steps):
        vecs = [
            a.product(Element.basis(i, dim), v)
            for i in range(dim)
            for v in span
        ]
        vecs = [v for v in vecs if not v.is_zero]
        if not vecs:
            return True
        m = ExactMatrix(dim, len(vecs))
        for j, v in enumerate(vecs):
            for k, c in enumerate(v.coords):
                if c:
                    m.set(k, j, c)
        r = rank(m)
        if r == prev_rank:
            return False
        prev_rank = r
        span = vecs
    return False


# ---------------------------------------------------------------------------
# named algebras

CATALOG_IDS = ("sl2", "heis3", "poly-trunc-3", "poly-trunc-4", "abelian-2")


def named_algebra(name: str) -> Algebra:
    """Small standard models addressable by id.

    "sl2": [e,f]=h, [h,e]=2e, [h,f]=-2f (basis e,f,h).
    "heis3": [e1,e2]=e3.
    "poly-trunc-m": truncated polynomials Q[t]/(t^m), unital, basis 1..t^{m-1}.
    "abelian-n": zero product on n basis vectors.
    """
    if name == "sl2":
        return Algebra(
            3,
            ("e", "f", "h"),
            {
                (0, 1): {2: ONE}, (1, 0): {2: Scalar(-1)},
                (2, 0): {0: Scalar(2)}, (0, 2): {0: Scalar(-2)},
                (2, 1): {1: Scalar(-2)}, (1, 2): {1: Scalar(2)},
            },
        )
    if name == "heis3":
        return Algebra(
            3, ("e1", "e2", "e3"),
            {(0, 1): {2: ONE}, (1, 0): {2: Scalar(-1)}},
        )
    if name.startswith("poly-trunc-"):
        m = int(name.rsplit("-", 1)[1])
        if m < 2:
            raise PreconditionError("truncation order must be >= 2")
        table = {
            (i, j): {i + j: ONE}
            for i in range(m)
            for j in range(m)
            if i + j < m
        }
        basis = ["1"] + [f"t^{k}" if k > 1 else "t" for k in range(1, m)]
        unit = [ONE] + [Scalar(0)] * (m - 1)
        return Algebra(m, basis, table, unital=True, unit=unit)
    if name.startswith("abelian-"):
        n = int(name.rsplit("-", 1)[1])
        return Algebra(n, None, {})
    raise PreconditionError(f"unknown algebra id {name!r}")


def truncated_derivation(m: int, k: int = 1) -> LinearMap:
    """The derivation t^k d/dt of Q[t]/(t^m), for k >= 1.

    The plain derivative d/dt does not preserve the ideal (t^m) -- its
    Leibniz law fails on basis pairs with i + j = m -- so k = 0 is rejected.
    t^k d/dt sends t^j to j t^{j+k-1}, truncated.
    """
    if k < 1:
        raise PreconditionError(
            "d/dt itself is not a derivation of the truncated ring; use k >= 1"
        )
    cols = []
    for j in range(m):
        c = [Scalar(0)] * m
        if j >= 1 and j + k - 1 < m:
            c[j + k - 1] = Scalar(j)
        cols.append(c)
    return LinearMap(cols)


def named_derivation(name: str) -> LinearMap:
    """Companion derivation for catalog entries that carry one (the Euler
    derivation t d/dt on the truncated polynomial algebras)."""
    if name.startswith("poly-trunc-"):
        return truncated_derivation(int(name.rsplit("-", 1)[1]))
    raise PreconditionError(f"no companion derivation for {name!r}")
