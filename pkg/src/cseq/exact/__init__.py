from .linalg import charpoly, det, inverse, null_space, rank, rref, span_rank
from .matrix import Matrix, block_diag
from .scalar import GaussianRational, Scalar, as_scalar, format_scalar, make, parse_scalar

__all__ = [
    "GaussianRational",
    "Matrix",
    "Scalar",
    "as_scalar",
    "block_diag",
    "charpoly",
    "det",
    "format_scalar",
    "inverse",
    "make",
    "null_space",
    "parse_scalar",
    "rank",
    "rref",
    "span_rank",
]
