"""Finite groupoid graded rings and graded unital modules over exact fields.

The package decides, by exact linear algebra at desk scale, the structural
properties of object-unital groupoid graded rings and their graded unital
modules: unitality, suspension, HOM decompositions, tensor products,
splitting, freeness by suspension, projectivity, Baer-style injectivity,
and (semi)simplicity. See the CLI entry point ``grumod`` for the batch
surface and ``grumod.props`` for the runnable property suites.
"""

from .fields import Field, FieldError, GF2, GF3, PrimeField, QQ, RationalField, field_from_spec
from .groupoid import (
    AxiomViolation,
    CompositionDomainMismatch,
    DuplicateId,
    EmptyProduct,
    Groupoid,
    GroupoidError,
    NotAGroup,
    SubsetElement,
    UnknownId,
    build_groupoid,
    cyclic_group_groupoid,
    disjoint_union,
    group_groupoid,
    pair_groupoid,
    sigma_set,
    subset_is_invertible,
    subset_star,
    trivial_groupoid,
    unit_subset,
)
from .linalg import DimensionMismatch, Matrix
from .ring import (
    CommutativeAlgebra,
    GradedRing,
    GradingViolation,
    NotAssociative,
    ObjectUnitReport,
    PartialActionSpec,
    RingElement,
    build_graded_ring,
    groupoid_algebra,
    homogeneous_decompose,
    is_object_unital,
    is_unital,
    partial_skew_ring,
    partial_skew_unit_comparison,
    support_subgroupoid,
)
from .module import (
    GradedModule,
    GradedSubmodule,
    ModuleElement,
    annihilator,
    build_graded_module,
    componentwise_equal,
    cyclic_submodule,
    direct_sum,
    is_graded_unital,
    quotient,
    regular_module,
    submodule_generated,
    suspension,
    suspension_functor,
    zero_module,
)
from .hom import (
    GradedMap,
    HomSpace,
    eta_check,
    factor_through,
    hom_action,
    hom_degree,
    hom_total,
    identity_map,
    inclusion_map,
    quotient_map,
    suspension_functor_on_map,
)
from .tensor import adjunction_check, tensor_graded, tensor_module
from .analysis import (
    AnalysisReport,
    ShortExactSequence,
    free_by_suspension,
    has_homogeneous_basis,
    is_direct_summand,
    is_injective_baer,
    is_projective,
    is_semisimple,
    is_simple,
    maximal_graded_submodule,
    ring_semisimple_report,
    split_check,
)
from .workspace import Workspace, parse_file, parse_workspace

__version__ = "0.1.0"
