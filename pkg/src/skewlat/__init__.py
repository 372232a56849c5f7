"""Computing with finite skew lattices."""

from .algebra import (
    CayleyAlgebra,
    DClassStructure,
    GreenRelations,
    Verdict,
    band_properties,
    classify,
    d_decomposition,
    green_relations,
    natural_leq,
    natural_preceq,
    rectangular_identity_check,
    subalgebra,
    verify_skew_lattice,
)
from .category import (
    associativity_audit,
    build_coset_category,
    categorical_verdict,
    compose,
    cross_product,
    is_categorical,
    is_strictly_categorical,
)
from .cosets import coset_bijection, coset_down, coset_partition, coset_up, image_set
from .formats import parse_algebra, serialize_algebra

__version__ = "0.1.0"
