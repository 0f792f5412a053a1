"""Exact analysis of the Craig-Sakamoto property det(I-sA-tB) = det(I-sA) det(I-tB)."""

from .bivar import (
    BivarPolynomial,
    coeff_grid,
    coeff_grid_interp,
    coeff_grid_minors,
    evaluate,
    mixed_minor,
    univariate_coeffs,
)
from .complementary import (
    ComplementaryReport,
    SubstitutionPattern,
    check_cor1,
    check_prop4,
    is_r_complementary,
    structured_matrix,
)
from .criterion import CsVerdict, Witness, cs_direct, cs_identity_check, cs_rank_test
from .exact import GaussianRational, Matrix, charpoly, det, null_space, parse_scalar, rank
from .flags import Flag

__version__ = "0.1.0"

__all__ = [
    "BivarPolynomial",
    "ComplementaryReport",
    "CsVerdict",
    "Flag",
    "GaussianRational",
    "Matrix",
    "SubstitutionPattern",
    "Witness",
    "charpoly",
    "check_cor1",
    "check_prop4",
    "coeff_grid",
    "coeff_grid_interp",
    "coeff_grid_minors",
    "cs_direct",
    "cs_identity_check",
    "cs_rank_test",
    "det",
    "evaluate",
    "is_r_complementary",
    "mixed_minor",
    "null_space",
    "parse_scalar",
    "rank",
    "structured_matrix",
    "univariate_coeffs",
]
