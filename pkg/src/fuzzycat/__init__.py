"""Exact finite computation with lattice-valued fuzzy structures and their categories."""

from .category import (
    Category,
    CrispMorphism,
    FiniteMap,
    MorphismPair,
    QuaObject,
    check_crisp_morphism,
    check_morphism,
    compose,
    crisp_to_pair,
    embed_qua_morphism,
    embed_qua_object,
    identity,
    pair_to_crisp,
)
from .errors import (
    ConstructionError,
    CrispnessViolation,
    FuzzyCatError,
    InvalidArgument,
    QuantifierBudgetError,
)
from .functors import (
    FunctorId,
    apply_functor_morphism,
    apply_functor_object,
    check_adjunction,
    check_diagram_fig2,
    check_functor_laws,
    check_isomorphism,
)
from .fuzzy import (
    FiniteSet,
    FunctionSpace,
    FuzzyRelation,
    FuzzySet,
    backward_powerset,
    compose_inf_hash,
    compose_sup_star,
    finite_set,
)
from .lattice import Lattice, make_lukasiewicz_chain, validate_lattice
from .partition import FuzzyPartition, lower_ftransform, make_partition, validate_partition
from .report import Check, ValidationReport
from .systems import LowerTransformationSystem, lts_from_partition, partition_from_lts, validate_lts
from .topology import (
    CechInterior,
    Pretopology,
    interior_from_partition,
    interior_from_pretopology,
    pretopology_from_interior,
    pretopology_from_partition,
    validate_interior,
    validate_pretopology,
)

__version__ = "0.1.0"
