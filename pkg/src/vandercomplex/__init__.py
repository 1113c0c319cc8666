"""Exact categorified determinants: Bruhat-order cochain complexes over GF(2).

Build the complex of a link diagram and a color vector, or of any
positive-integer matrix, take exact cohomology over the two-element
field, and check that the Euler characteristic reproduces the
(generalized) Vandermonde determinant.
"""

from .bruhat import (
    BruhatPoset,
    Perm,
    build_bruhat,
    covers,
    inversions,
    length2_middles,
    mahonian_distribution,
)
from .cochain import (
    CochainComplex,
    HomologyReport,
    OrderIndependenceResult,
    build_complex,
    cochain_dims,
    euler_characteristic,
    homology,
    order_independence_check,
    verify_euler,
)
from .errors import (
    CompositionError,
    ConsistencyError,
    FormatError,
    MembershipError,
    PreconditionError,
    SizeError,
    StructureError,
    ValidationError,
    VanderComplexError,
)
from .gendet import (
    PosIntMatrix,
    build_matrix_complex,
    det_exact,
    det_permutation_expansion,
    matrix_report,
    parse_matrix,
    vandermonde_matrix,
)
from .gf2 import GF2Matrix, GF2Vector, QuotientSpace, coset_coordinates
from .linkdiag import (
    Crossing,
    LinkDiagram,
    circle_count,
    circles,
    disjoint_union,
    format_diagram,
    is_height_uniform,
    parse_diagram,
    random_diagram,
    s_vector,
    torus_two_n,
)
from .tqft import (
    AlgebraSpec,
    connected_map,
    frobenius_check,
    sphere_scalar,
    tensor_assemble,
)
from .zndiag import (
    ChainMap,
    ZndiagMorphism,
    chain_map,
    cohomology_quotients,
    compose,
    identity_morphism,
    induced_cohomology_map,
    induced_map_from,
    parse_morphism,
    random_morphism,
    validate_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "BruhatPoset",
    "ChainMap",
    "CochainComplex",
    "CompositionError",
    "ConsistencyError",
    "Crossing",
    "FormatError",
    "GF2Matrix",
    "GF2Vector",
    "HomologyReport",
    "LinkDiagram",
    "MembershipError",
    "OrderIndependenceResult",
    "Perm",
    "PosIntMatrix",
    "PreconditionError",
    "QuotientSpace",
    "SizeError",
    "StructureError",
    "ValidationError",
    "VanderComplexError",
    "ZndiagMorphism",
    "build_bruhat",
    "build_complex",
    "build_matrix_complex",
    "chain_map",
    "circle_count",
    "circles",
    "cochain_dims",
    "cohomology_quotients",
    "compose",
    "connected_map",
    "coset_coordinates",
    "covers",
    "det_exact",
    "det_permutation_expansion",
    "disjoint_union",
    "euler_characteristic",
    "format_diagram",
    "frobenius_check",
    "homology",
    "identity_morphism",
    "induced_cohomology_map",
    "induced_map_from",
    "inversions",
    "is_height_uniform",
    "length2_middles",
    "mahonian_distribution",
    "matrix_report",
    "order_independence_check",
    "parse_diagram",
    "parse_matrix",
    "parse_morphism",
    "random_diagram",
    "random_morphism",
    "s_vector",
    "sphere_scalar",
    "tensor_assemble",
    "torus_two_n",
    "validate_morphism",
    "vandermonde_matrix",
    "verify_euler",
]
