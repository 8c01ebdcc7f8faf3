"""Exact computer algebra for transposed Poisson structures.

Structure-constant algebras over the (Gaussian) rationals, a declarative
polynomial-identity catalog, exact nullspace solvers for derivation-type
spaces, constructive theorems (brackets from derivations, Kantor doubles,
n-Lie lifts), oscillator and Witt/W(1) model families, the fraction-field
bracket, and a deterministic batch CLI.
"""

from .constructions import (
    NTPTuple,
    TPPair,
    both_poisson_and_tp_check,
    bracket_from_derivation,
    kantor_double,
    n_plus_one_lie_candidate,
    nilpotent_nlie_tp,
    quasi_poisson_check,
    recover_derivation,
    three_lie_from_tp,
    tp_pair_from_derivation,
)
from .core import (
    Algebra,
    BilinearMap,
    Element,
    LinearMap,
    NAryAlgebra,
    SuperAlgebra,
    make_algebra,
    multiply,
    nary_apply,
)
from .errors import (
    CapacityError,
    DimensionError,
    InvalidFractionError,
    PreconditionError,
    TableError,
    TPAlgebraError,
)
from .fieldbr import FieldContext, field_bracket, verify_field_axioms
from .graded import WittTPPair, verify_window, witt_tp_pair
from .identities import (
    CATALOG,
    CheckReport,
    catalog_table,
    check_identity,
    check_jordan_super,
    evaluate_defect,
)
from .models import (
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
)
from .poly import DerivationSpec, PolyFraction, Polynomial, frac_eq, poly_derive
from .scalars import HALF, I, ONE, ZERO, S, Scalar
from .solvers import (
    SolutionSpace,
    delta_biderivations,
    delta_derivations,
    filter_associative,
    hom_lie_maps,
    nary_delta_derivations,
    tp_product_space,
)

__version__ = "0.1.0"
