"""Weak Lefschetz property, generic splitting types and semistability for
syzygy bundles of Artinian ideals in K[X, Y, Z], in exact arithmetic."""

__version__ = "0.1.0"

from .artinian import (
    HilbertFunction,
    IdealGenerators,
    NotArtinianError,
    algebra_basis,
    hilbert_function,
    ideal_graded_dim,
    is_complete_intersection,
)
from .concordance import FuzzSpec, concord, fuzz
from .exactla import RationalMatrix, kernel_basis, rank
from .lefschetz import WlpReport, kernel_witness, mult_map_matrix, wlp_check, x3y3z3_obstruction
from .pencil import SplittingType, restricted_syzygy_dims, splitting_gap, splitting_type
from .qpoly import (
    BinaryForm,
    HomogeneousPolynomial,
    LinearForm,
    Monomial,
    monomial_gcd_degree,
    parse_polynomial,
    restrict_to_line,
)
from .stability import StabilityReport, monomial_semistable, subset_slope, syzygy_slope
