"""Equidistant codes over finite vector spaces.

Construction, exact verification, bounds, and desk-scale exhaustive search
for constant-dimension subspace codes (spreads, sunflowers, balls,
minor-coordinate line codes) and equidistant constant-rank matrix codes.
"""

from .codes import (CodeProfile, SpreadBounds, SubspaceCode, fw_bound,
                    largest_sunflower_size, partial_spread_bounds, profile,
                    sunflower_bound)
from .constructions import (IncidenceMatrix, PluckerIndex, ball,
                            example_code_g2_6_3, extend_code,
                            mixed_projective_code, orthogonal_code,
                            plucker_code, plucker_codeword, plucker_embed,
                            recursive_step, spread, steiner_from_grassmannian,
                            sunflower)
from .gf import (FieldCtx, FieldError, field_arith, field_for_order,
                 field_new, primitive_element)
from .linalg import MatrixGF, det, kernel, rank, rank_distance, rref
from .rankmetric import RankCode, m_matrix, minor_vector, phi, rank_code
from .search import (SearchBudget, SearchResult, max_partial_spread,
                     max_t_intersecting_clique)
from .subspace import (Subspace, enumerate_grassmannian, intersect,
                       orthogonal_complement, qbinom, subspace_distance,
                       subspace_from_generators, subspace_sum)

__version__ = "0.1.0"

__all__ = [
    "CodeProfile", "FieldCtx", "FieldError", "IncidenceMatrix", "MatrixGF",
    "PluckerIndex", "RankCode", "SearchBudget", "SearchResult", "SpreadBounds",
    "Subspace", "SubspaceCode", "ball", "det", "enumerate_grassmannian",
    "example_code_g2_6_3", "extend_code", "field_arith", "field_for_order",
    "field_new", "fw_bound", "intersect", "kernel", "largest_sunflower_size",
    "m_matrix", "max_partial_spread", "max_t_intersecting_clique",
    "minor_vector", "mixed_projective_code", "orthogonal_code",
    "orthogonal_complement", "partial_spread_bounds", "phi", "plucker_code",
    "plucker_codeword", "plucker_embed", "primitive_element", "profile",
    "qbinom", "rank", "rank_code", "rank_distance", "recursive_step", "rref",
    "spread", "steiner_from_grassmannian", "subspace_distance",
    "subspace_from_generators", "subspace_sum", "sunflower", "sunflower_bound",
]
