import pytest

from tpalgebra import (
    Algebra,
    Element,
    LinearMap,
    NAryAlgebra,
    check_identity,
    evaluate_defect,
)
from tpalgebra.errors import DimensionError, PreconditionError
from tpalgebra.identities import CATALOG, catalog_table
from tpalgebra.models import named_algebra
from tpalgebra.scalars import ONE, Scalar


def test_catalog_listing_is_complete():
    rows = {r["id"] for r in catalog_table()}
    assert {
        "comm", "assoc", "anticomm", "jacobi", "tp-compat",
        "poisson-leibniz", "gen-poisson", "jordan-bracket-unital",
        "jordan-bracket-1", "jordan-bracket-2", "jordan-bracket-3",
        "gd", "f-manifold", "quasi-poisson", "hom-lie", "tp-nlie",
        "poisson-nlie", "nlie-fundamental", "farkas-relation", "quasi-auto",
    } <= rows


@pytest.mark.parametrize("name", ["sl2", "heis3"])
def test_lie_axioms_on_models(name):
    alg = named_algebra(name)
    assert check_identity("jacobi", {"bracket": alg}).holds
    assert check_identity("anticomm", {"bracket": alg}).holds


def test_jacobi_fails_with_witness():
    # [e0,e1]=e0 and [e1,e2]=e1: anticommutative but not Jacobi
    bad = Algebra(
        3, None,
        {
            (0, 1): {0: ONE}, (1, 0): {0: -ONE},
            (1, 2): {1: ONE}, (2, 1): {1: -ONE},
        },
    )
    rep = check_identity("jacobi", {"bracket": bad})
    assert not rep.holds
    assert rep.witness is not None and rep.defect is not None
    # witness re-evaluates to the same nonzero defect
    args = [Element.basis(i, 3) for i in rep.witness]
    assert evaluate_defect("jacobi", {"bracket": bad}, args) == rep.defect


def test_comm_assoc_on_product(trunc3_pair):
    assert check_identity("comm", {"product": trunc3_pair.product}).holds
    assert check_identity("assoc", {"product": trunc3_pair.product}).holds


def test_tp_compat(trunc4_pair):
    both = {"product": trunc4_pair.product, "bracket": trunc4_pair.bracket}
    assert check_identity("tp-compat", both).holds


def test_poisson_leibniz_fails_on_transposed_pair(trunc4_pair):
    both = {"product": trunc4_pair.product, "bracket": trunc4_pair.bracket}
    rep = check_identity("poisson-leibniz", both)
    assert not rep.holds


@pytest.mark.parametrize(
    "ident",
    [
        "gen-poisson",
        "jordan-bracket-unital",
        "jordan-bracket-1",
        "jordan-bracket-2",
        "jordan-bracket-3",
        "gd",
        "f-manifold",
    ],
)
def test_unital_tp_consequences(trunc4_pair, ident):
    both = {"product": trunc4_pair.product, "bracket": trunc4_pair.bracket}
    assert check_identity(ident, both).holds, ident


def test_unit_slot_resolution(trunc4_pair, heis3):
    # unit is picked up from the unital product automatically
    both = {"product": trunc4_pair.product, "bracket": trunc4_pair.bracket}
    assert check_identity("gen-poisson", both).holds
    with pytest.raises(PreconditionError):
        check_identity("gen-poisson", {"product": heis3, "bracket": heis3})


def test_hom_lie(sl2):
    assert check_identity(
        "hom-lie", {"bracket": sl2, "aux": LinearMap.identity(3)}
    ).holds
    # projection onto e: [e,[f,h]] = 2h is the lone surviving cyclic term
    proj = LinearMap([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert not check_identity("hom-lie", {"bracket": sl2, "aux": proj}).holds


def test_quasi_auto(trunc4_pair):
    both = {"product": trunc4_pair.product, "bracket": trunc4_pair.bracket}
    for h in (Element.basis(0, 4), Element([1, 2, 0, "1/2"])):
        assert check_identity("quasi-auto", {**both, "helem": h}).holds


def test_nary_identities_on_heisenberg(heis3):
    nary = NAryAlgebra(3, 2, dict(heis3.table))
    assert check_identity("nlie-fundamental", {"nary": nary}).holds
    product = Algebra(3, None, {(i, j): {2: ONE} for i in (0, 1) for j in (0, 1)})
    assert check_identity("tp-nlie", {"product": product, "nary": nary}).holds
    assert check_identity("poisson-nlie", {"product": product, "nary": nary}).holds


def test_missing_slots_and_unknown_id(sl2):
    with pytest.raises(KeyError):
        check_identity("no-such-identity", {})
    with pytest.raises(PreconditionError):
        check_identity("tp-compat", {"bracket": sl2})


def test_dimension_mismatch(sl2):
    with pytest.raises(DimensionError):
        check_identity(
            "tp-compat", {"product": named_algebra("abelian-2"), "bracket": sl2}
        )


def test_report_shape(sl2):
    rep = check_identity("jacobi", {"bracket": sl2})
    d = rep.to_dict()
    assert d["verdict"] == "holds" and d["tuples_checked"] == 27
    assert "witness" not in d


def test_arity_dependent_catalog_entries():
    spec = CATALOG["tp-nlie"]
    assert spec.arity is None and spec.nary_arity(3) == 4
    assert CATALOG["nlie-fundamental"].nary_arity(3) == 5
