"""Dense real-matrix kernel: spectra, rank, characteristic polynomials,
matrix power limits and index."""
from .eigen import (
    CLUSTER_TOL,
    EIG_TOL,
    Spectrum,
    cluster_ids,
    eigenvalues,
    eigenvalues_batch,
    eigenvector_for,
    spectral_radius,
)
from .exact import exact_nullspace, exact_rank
from .poly import Polynomial, X, char_poly, is_exact_matrix, to_exact
from .powers import RANK_TOL, Divergent, index_of, matrix_power_limit, rank, rank_margin

__all__ = [
    "CLUSTER_TOL", "EIG_TOL", "RANK_TOL", "Divergent", "Polynomial", "Spectrum", "X",
    "char_poly", "cluster_ids", "eigenvalues", "eigenvalues_batch", "eigenvector_for",
    "exact_nullspace", "exact_rank", "index_of", "is_exact_matrix", "matrix_power_limit",
    "rank", "rank_margin", "spectral_radius", "to_exact",
]
