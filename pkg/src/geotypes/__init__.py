"""Geometric types of Markov partitions: validation, refinement, boundary codes and code equivalence."""

from .boundary import (
    BoundaryLabel,
    OrbitDecomposition,
    check_injectivity,
    eta,
    gamma,
    orbit,
    parse_label,
    s_boundary_code,
    theta,
    u_boundary_code,
    upsilon,
)
from .codes import BiCode, OneSidedCode, parse_bicode, parse_onesided
from .core import (
    GeometricType,
    IncidenceMatrix,
    ValidationReport,
    alpha,
    incidence_matrix,
    is_binary,
    is_mixing,
    validate,
    word_count,
)
from .equivalence import (
    ClassReport,
    CompareReport,
    PartnerCertificate,
    class_of,
    compare_types,
    pivot_k,
    pivot_z,
    s_partner,
    sim_s,
    sim_T,
    sim_u,
    u_partner,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    FlavorError,
    GeoTypeError,
    IndeterminateError,
    InvalidGeometricType,
    InvalidLabel,
    ParseError,
    PreconditionError,
)
from .refinement import binary_refinement, lex_index, refine_if_needed
from .shift import (
    ClassificationFlags,
    classify,
    enumerate_periodic,
    is_admissible,
    negative_part,
    positive_part,
    shift,
)
