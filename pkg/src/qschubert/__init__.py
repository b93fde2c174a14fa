"""Exact symbolic computation in quantum matrix algebras, quantum
grassmannians, quantum Schubert varieties, and quantum determinantal
rings.

Everything is computed over Q(q) with exact Laurent-polynomial
arithmetic; every structural identity the library exposes is verified
by expansion into the normal-form basis of the ambient quantum matrix
algebra.
"""

from .coeffield import LaurentQ, ONE, ZERO, laurent, parse_laurent, q_power
from .config import Budget, default_budget
from .errors import (
    BudgetExceeded,
    HypothesisViolated,
    InhomogeneousInput,
    NoRelationFound,
    NotInResidualPoset,
    PreconditionViolated,
    QAlgebraError,
    ShapeMismatch,
    VerificationFailed,
    ZeroSpecialization,
)
from .ncpoly import NcPoly, confluence_check, graded_basis, nc_mul
from .minors import (
    IndexPair,
    MinorRelation,
    find_relations,
    format_index_pair,
    format_index_set,
    index_pair,
    index_set,
    maximal_minor,
    muir_extend,
    parse_index_pair,
    parse_index_set,
    quantum_minor,
    scale_by_q,
)
from .poset import (
    MinorPoset,
    comparable,
    delta_map,
    delta_map_is_order_iso,
    delta_map_top,
    gkdim_grassmannian,
    gkdim_matrix,
    gorenstein,
    gorenstein_hvector_oracle,
    h_vector,
    is_palindromic,
    ladder,
    ladder_label,
    ladder_label_characterization,
    ladder_positions,
    leq_st,
    lt_st,
    rank_and_gkdim,
)
from .schubert import (
    AlgElement,
    LadderExpression,
    asl_check,
    express_in_ladder,
    hilbert_report,
    ladder_relations_check,
    pieri_check,
    project,
    standard_monomials,
    straighten,
    straighten_project,
)
from .detring import (
    DetAlgElement,
    dehom_correspondence_check,
    delta_normality_check,
    det_dimension_check,
    det_standard_monomials,
    determinantal_delta,
    determinantal_ideal_check,
    laplace_last_row,
    project_det,
    straighten_det,
    straighten_det_project,
)

__version__ = "0.1.0"

__all__ = [
    "AlgElement",
    "Budget",
    "BudgetExceeded",
    "DetAlgElement",
    "HypothesisViolated",
    "IndexPair",
    "InhomogeneousInput",
    "LadderExpression",
    "LaurentQ",
    "MinorPoset",
    "MinorRelation",
    "NcPoly",
    "NoRelationFound",
    "NotInResidualPoset",
    "ONE",
    "PreconditionViolated",
    "QAlgebraError",
    "ShapeMismatch",
    "VerificationFailed",
    "ZERO",
    "ZeroSpecialization",
    "asl_check",
    "comparable",
    "confluence_check",
    "default_budget",
    "dehom_correspondence_check",
    "delta_map",
    "delta_map_is_order_iso",
    "delta_map_top",
    "delta_normality_check",
    "det_dimension_check",
    "det_standard_monomials",
    "determinantal_delta",
    "determinantal_ideal_check",
    "express_in_ladder",
    "find_relations",
    "format_index_pair",
    "format_index_set",
    "gkdim_grassmannian",
    "gkdim_matrix",
    "gorenstein",
    "gorenstein_hvector_oracle",
    "graded_basis",
    "h_vector",
    "hilbert_report",
    "index_pair",
    "index_set",
    "is_palindromic",
    "ladder",
    "ladder_label",
    "ladder_label_characterization",
    "ladder_positions",
    "ladder_relations_check",
    "laplace_last_row",
    "laurent",
    "leq_st",
    "lt_st",
    "maximal_minor",
    "muir_extend",
    "nc_mul",
    "parse_index_pair",
    "parse_index_set",
    "parse_laurent",
    "pieri_check",
    "project",
    "project_det",
    "q_power",
    "quantum_minor",
    "rank_and_gkdim",
    "scale_by_q",
    "standard_monomials",
    "straighten",
    "straighten_det",
    "straighten_det_project",
    "straighten_project",
]
