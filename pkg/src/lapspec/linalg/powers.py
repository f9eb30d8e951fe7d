"""Numerical rank, matrix index and limits of matrix powers."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .exact import exact_rank
from .poly import is_exact_matrix

#: relative threshold on |R_kk| / |R_00| in pivoted QR
RANK_TOL = 1e-9


def rank(m, rank_tol: float = RANK_TOL) -> int:
    """Numerical rank by column-pivoted Householder QR.

    Counts the ``|R_kk| > rank_tol * |R_00|``; the zero matrix has rank 0.
    Matrices of ints/Fractions (object dtype) get their exact rank instead.
    Complex input is accepted.
    """
    m = getattr(m, "matrix", m)
    if is_exact_matrix(m):
        return exact_rank(m)
    a = np.ascontiguousarray(np.asarray(m), dtype=np.complex128)
    if a.size == 0:
        return 0
    diag = _kernels.pivoted_qr_diag(a)
    if diag[0] == 0.0:
        return 0
    return int(np.sum(diag > rank_tol * diag[0]))


def rank_margin(m, rank_tol: float = RANK_TOL) -> float:
    """log10 distance of the nearest |R_kk|/|R_00| ratio from the threshold.

    Small values mean the rank decision was close.
    """
    a = np.ascontiguousarray(np.asarray(getattr(m, "matrix", m)), dtype=np.complex128)
    diag = _kernels.pivoted_qr_diag(a)
    if diag[0] == 0.0:
        return np.inf
    ratios = np.maximum(diag / diag[0], 1e-300)
    return float(np.min(np.abs(np.log10(ratios) - np.log10(rank_tol))))


@dataclass(frozen=True)
class Divergent:
    """Returned by :func:`matrix_power_limit` when no limit was detected."""

    power: int
    step: float

    def __bool__(self):
        return False


def matrix_power_limit(m, tol: float = 1e-12, max_k: int = 10**6):
    """``lim M^k`` by repeated squaring, or :class:`Divergent`.

    Stops at the first ``A = M^(2^j)`` with ``||A M - A||_inf <= tol``.
    """
    a = np.asarray(getattr(m, "matrix", m), dtype=np.float64)
    power = 1
    cur = a.copy()
    while True:
        step = float(np.max(np.sum(np.abs(cur @ a - cur), axis=1))) if a.size else 0.0
        if step <= tol:
            return cur
        if power >= max_k or not np.all(np.isfinite(cur)):
            return Divergent(power, step)
        cur = cur @ cur
        power *= 2


def index_of(m, rank_tol: float = RANK_TOL) -> int:
    """Least ``k`` with ``rank A^(k+1) == rank A^k`` (``A^0 = I``).

    In floating point, ``rank A^(k+1)`` is taken as the rank of ``A Q_k``
    with ``Q_k`` an orthonormal basis of ``range A^k``; singular values are
    measured against ``||A||_2``.  Forming ``A^k`` directly would raise a
    small eigenvalue to the k-th power and push it under the threshold.
    """
    m = getattr(m, "matrix", m)
    n = np.asarray(m).shape[0]
    if is_exact_matrix(m):
        a = np.asarray(m, dtype=object)
        power = np.eye(n, dtype=int).astype(object)
        prev = n
        for k in range(n + 1):
            power = power.dot(a)
            r = rank(power)
            if r == prev:
                return k
            prev = r
        return n
    a = np.asarray(m, dtype=np.complex128)
    if n == 0:
        return 0
    top = np.linalg.norm(a, 2)
    if top == 0.0:
        return 1
    basis = np.eye(n, dtype=np.complex128)
    prev = n
    for k in range(n + 1):
        if basis.shape[1] == 0:
            return k
        u, s, _ = np.linalg.svd(a @ basis, full_matrices=False)
        r = int(np.sum(s > rank_tol * top))
        if r == prev:
            return k
        basis = u[:, :r]
        prev = r
    return n
