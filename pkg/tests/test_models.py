import itertools

import pytest

from tpalgebra import Element, LinearMap, check_identity
from tpalgebra.errors import PreconditionError
from tpalgebra.models import (
    AutomorphismParams,
    ClassificationFamily,
    HalfDerParams,
    OscillatorParams,
    apply_basis_change,
    canonical_tp_pair,
    canonical_tp_product,
    named_algebra,
    named_derivation,
    oscillator,
    oscillator_automorphism,
    oscillator_half_derivation,
    oscillator_tp_pair,
    oscillator_tp_product,
    product_is_nilpotent,
    truncated_derivation,
)
from tpalgebra.scalars import HALF, ONE, Scalar
from tpalgebra.solvers import delta_derivations

P1 = OscillatorParams(1, (1,), generic=True)
P2 = OscillatorParams(2, (1, 2), generic=True)


def _zeros(n):
    return (Scalar(0),) * n


# ---------------------------------------------------------------------------
# parameter validation

def test_lambda_validation():
    with pytest.raises(PreconditionError):
        OscillatorParams(2, (2, 1))  # not ascending
    with pytest.raises(PreconditionError):
        OscillatorParams(1, (0,))  # not positive
    with pytest.raises(PreconditionError):
        OscillatorParams(1, (Scalar(0, 1),))  # not rational
    with pytest.raises(PreconditionError):
        OscillatorParams(2, (1, 2, 3))  # wrong length


def test_generic_invariants():
    with pytest.raises(PreconditionError):
        OscillatorParams(1, (2,), generic=True)  # lambda_1 != 1
    with pytest.raises(PreconditionError):
        OscillatorParams(2, (1, 1), generic=True)  # not strict
    with pytest.raises(PreconditionError):
        OscillatorParams(3, (1, 2, 3), generic=True)  # 1 + 2 = 3
    assert OscillatorParams(3, (1, 2, 4), generic=True).dim == 8


# ---------------------------------------------------------------------------
# oscillator bracket

def test_oscillator_table_n1():
    alg = oscillator(P1)  # basis (e-1, e0, e1, f1)
    assert alg.dim == 4 and alg.basis == ("e-1", "e0", "e1", "f1")
    assert alg.basis_product(0, 2) == {3: ONE}   # [e-1, e1] = f1
    assert alg.basis_product(0, 3) == {2: -ONE}  # [e-1, f1] = -e1
    assert alg.basis_product(2, 3) == {1: ONE}   # [e1, f1] = e0
    assert check_identity("jacobi", {"bracket": alg}).holds
    assert check_identity("anticomm", {"bracket": alg}).holds


def test_oscillator_lambda_scaling():
    alg = oscillator(OscillatorParams(2, ("1/2", 3)))
    assert alg.basis_product(0, 3) == {5: Scalar(3)}  # [e-1, e2] = 3 f2
    assert check_identity("jacobi", {"bracket": alg}).holds


# ---------------------------------------------------------------------------
# 1/2-derivations

def test_half_derivation_lies_in_solver_space():
    alg = oscillator(P2)
    space = delta_derivations(alg, HALF)
    h = HalfDerParams("2", "1/3", ("1", "-1"), ("0", "5"))
    phi = oscillator_half_derivation(P2, h)
    assert space.contains_linear(phi)


def test_half_derivation_family_spans_solver_space():
    alg = oscillator(P2)
    space = delta_derivations(alg, HALF)
    assert space.dimension == 2 * P2.n + 2
    # one generator per parameter slot must land in the solved space
    n = P2.n
    gens = [
        HalfDerParams(ONE, Scalar(0), _zeros(n), _zeros(n)),
        HalfDerParams(Scalar(0), ONE, _zeros(n), _zeros(n)),
    ]
    for j in range(n):
        a = list(_zeros(n))
        a[j] = ONE
        gens.append(HalfDerParams(Scalar(0), Scalar(0), tuple(a), _zeros(n)))
        gens.append(HalfDerParams(Scalar(0), Scalar(0), _zeros(n), tuple(a)))
    maps = [oscillator_half_derivation(P2, g) for g in gens]
    assert len(maps) == space.dimension
    for phi in maps:
        assert space.contains_linear(phi)
    # the generators are linearly independent, so they span the space
    from tpalgebra.linsolve import ExactMatrix, rank

    dim = alg.dim
    m = ExactMatrix(dim * dim, len(maps))
    for col, phi in enumerate(maps):
        for i in range(dim):
            for j in range(dim):
                c = phi.entry(i, j)
                if c:
                    m.set(i * dim + j, col, c)
    assert rank(m) == space.dimension


@pytest.mark.parametrize("n_dims", [(1, 4), (2, 6), (3, 8)])
def test_half_derivation_dimension_formula(n_dims):
    n, expected = n_dims
    p = OscillatorParams(n, tuple(range(1, n + 1)))
    assert delta_derivations(oscillator(p), HALF).dimension == expected


# ---------------------------------------------------------------------------
# transposed Poisson products

GRID = [
    HalfDerParams(g, m, (a,), (b,))
    for g in (Scalar(0), ONE, Scalar(-2))
    for m in (Scalar(0), ONE)
    for a in (Scalar(0), Scalar("1/2"))
    for b in (Scalar(0), Scalar(3))
]


@pytest.mark.parametrize("h", GRID)
def test_tp_product_grid(h):
    pair = oscillator_tp_pair(P1, h)  # TPPair verifies all axioms
    both = {"product": pair.product, "bracket": pair.bracket}
    is_poisson = check_identity("poisson-leibniz", both).holds
    trivial = not h.gamma and not any(h.alpha) and not any(h.beta)
    assert is_poisson == trivial


def test_tp_product_values():
    h = HalfDerParams("2", "1", ("3",), ("-1",))
    prod = oscillator_tp_product(P1, h)
    # e-1 . e-1 = 2 e-1 + e0 - 2(3 e1 - f1)
    assert prod.basis_product(0, 0) == {
        0: Scalar(2), 1: ONE, 2: Scalar(-6), 3: Scalar(2)
    }
    assert prod.basis_product(0, 1) == {1: Scalar(2)}
    assert prod.basis_product(0, 2) == {1: Scalar(3), 2: Scalar(2)}
    assert prod.basis_product(0, 3) == {1: -ONE, 3: Scalar(2)}
    assert prod.basis_product(2, 2) == {1: -ONE}  # -gamma/(2 lam) = -1
    assert prod.basis_product(3, 3) == {1: -ONE}
    assert prod.basis_product(2, 3) == {}


def test_tp_product_from_two_lambda():
    h = HalfDerParams("1", "0", ("0", "0"), ("0", "0"))
    prod = oscillator_tp_product(P2, h)
    assert prod.basis_product(3, 3) == {1: Scalar("-1/4")}  # -1/(2*2)
    oscillator_tp_pair(P2, h)  # verifies


# ---------------------------------------------------------------------------
# automorphisms

def test_identity_automorphism():
    a = AutomorphismParams(1, 0, (0,), (0,), (1,), (0,))
    assert oscillator_automorphism(P1, a) == LinearMap.identity(4)


def test_negative_automorphism():
    a = AutomorphismParams(-1, 0, (0,), (0,), (1,), (0,))
    phi = oscillator_automorphism(P1, a)
    assert phi.apply(Element.basis(0, 4)) == -Element.basis(0, 4)
    assert phi.apply(Element.basis(1, 4)) == -Element.basis(1, 4)
    assert phi.apply(Element.basis(2, 4)) == Element.basis(2, 4)
    # f1 -> s mu f1 = -f1 under the sign flip
    assert phi.apply(Element.basis(3, 4)) == -Element.basis(3, 4)


def test_generic_automorphism_preserves_bracket():
    a = AutomorphismParams(
        1, "1/2", ("1", "-2"), ("0", "3"), ("2", "2"), ("1", "-1")
    )
    phi = oscillator_automorphism(P2, a)
    alg = oscillator(P2)
    x = Element([1, 2, 3, 4, 5, 6])
    y = Element([0, 1, -1, 2, 0, 1])
    assert phi.apply(alg.product(x, y)) == alg.product(phi.apply(x), phi.apply(y))


def test_non_constant_xi_rejected():
    with pytest.raises(PreconditionError, match="depend"):
        AutomorphismParams(1, 0, (0, 0), (0, 0), (1, 2), (0, 0))
    with pytest.raises(PreconditionError, match="nonzero"):
        AutomorphismParams(1, 0, (0,), (0,), (0,), (0,))


# ---------------------------------------------------------------------------
# classification families

def test_family_validation():
    with pytest.raises(PreconditionError):
        ClassificationFamily("A", 0)
    with pytest.raises(PreconditionError):
        ClassificationFamily("B.b", beta=(Scalar(2),))  # first nonzero != 1
    with pytest.raises(PreconditionError):
        ClassificationFamily("B.b", beta=(Scalar(0, -1),))  # wrong half-plane
    ClassificationFamily("B.b", beta=(Scalar(0),))  # trivial beta is fine
    ClassificationFamily("B.a", beta=(Scalar(0), ONE, Scalar("1/2")))
    with pytest.raises(PreconditionError):
        ClassificationFamily("C")


def test_family_A_transport_to_negative_gamma():
    for p in (P1, P2):
        pos = canonical_tp_pair(p, ClassificationFamily("A", Scalar(3)))
        neg = canonical_tp_pair(p, ClassificationFamily("A", Scalar(-3)))
        a = AutomorphismParams(
            -1, 0, _zeros(p.n), _zeros(p.n), (ONE,) * p.n, _zeros(p.n)
        )
        phi = oscillator_automorphism(p, a)
        assert apply_basis_change(pos, phi) == neg


def test_family_nilpotency_split():
    a = canonical_tp_product(P1, ClassificationFamily("A", ONE))
    ba = canonical_tp_product(P1, ClassificationFamily("B.a", beta=(ONE,)))
    bb = canonical_tp_product(P1, ClassificationFamily("B.b", beta=(ONE,)))
    assert not product_is_nilpotent(a)
    assert product_is_nilpotent(ba)
    assert product_is_nilpotent(bb)


def test_classification_requires_generic():
    with pytest.raises(PreconditionError, match="generic"):
        canonical_tp_product(
            OscillatorParams(1, (2,)), ClassificationFamily("A", ONE)
        )


def test_family_pairs_verify():
    for fam in (
        ClassificationFamily("A", Scalar("1/2")),
        ClassificationFamily("B.a", beta=(ONE, Scalar(2, 1))),
        ClassificationFamily("B.b", beta=(Scalar(0), ONE)),
    ):
        canonical_tp_pair(P2, fam)  # constructor verifies the axioms


# ---------------------------------------------------------------------------
# basis change

def test_basis_change_identity(trunc3_pair):
    assert apply_basis_change(trunc3_pair, LinearMap.identity(3)) == trunc3_pair


def test_basis_change_permutation(heis3):
    from tpalgebra.constructions import TPPair

    pair = TPPair(named_algebra("abelian-3"), heis3)
    # swap e1 and e2: the bracket flips sign on the (0,1) slot
    phi = LinearMap([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    out = apply_basis_change(pair, phi)
    assert out.bracket.basis_product(0, 1) == {2: -ONE}
    assert apply_basis_change(out, phi) == pair


def test_basis_change_requires_invertible(trunc3_pair):
    with pytest.raises(PreconditionError):
        apply_basis_change(trunc3_pair, LinearMap.zero(3))


# ---------------------------------------------------------------------------
# named models

def test_named_algebra_errors():
    with pytest.raises(PreconditionError):
        named_algebra("nope")
    with pytest.raises(PreconditionError):
        named_algebra("poly-trunc-1")
    with pytest.raises(PreconditionError):
        named_derivation("sl2")


def test_truncated_derivation_values():
    d = truncated_derivation(4, 2)  # t^2 d/dt
    assert d.apply(Element.basis(1, 4)) == Element.basis(2, 4)  # t -> t^2
    assert d.apply(Element.basis(2, 4)) == Element.basis(3, 4).scale(2)
    assert d.apply(Element.basis(3, 4)).is_zero  # 3 t^4 truncates away
    with pytest.raises(PreconditionError):
        truncated_derivation(4, 0)


def test_product_is_nilpotent_basics(heis3):
    assert product_is_nilpotent(named_algebra("abelian-2"))
    assert product_is_nilpotent(heis3)
    assert not product_is_nilpotent(named_algebra("poly-trunc-3"))
