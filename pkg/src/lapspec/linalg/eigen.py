"""Spectra of dense nonsymmetric real matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NoConvergence, NotAnEigenvalue
from . import _kernels

#: relative residual tolerance: ``tol = EIG_TOL * max(1, ||M||_F)``
EIG_TOL = 1e-10
#: eigenvalues closer than this are treated as one cluster
CLUSTER_TOL = 1e-6


def as_float_matrix(m) -> np.ndarray:
    """Float64 copy of ``m`` (accepts Fraction object arrays and laplacians)."""
    m = getattr(m, "matrix", m)
    a = np.asarray(m)
    if a.dtype == object:
        a = a.astype(float)
    a = np.ascontiguousarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def absolute_tol(a: np.ndarray, tol: float | None) -> float:
    rel = EIG_TOL if tol is None else tol
    return rel * max(1.0, float(np.linalg.norm(a)))


def max_sweeps_for(n: int) -> int:
    return 100 * max(n, 1)


def cluster_ids(values: np.ndarray, cluster_tol: float = CLUSTER_TOL) -> np.ndarray:
    """Union-find labels: values within ``cluster_tol`` share a label.

    Labels are numbered in order of first appearance.
    """
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= cluster_tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    labels = {}
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        out[i] = labels.setdefault(find(i), len(labels))
    return out


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of one matrix with per-eigenvalue residuals and clusters.

    ``residuals[i]`` is ``||M v - lambda_i v||_2`` for the unit vector found
    by inverse iteration (NaN when residuals were not requested).
    """

    eigenvalues: np.ndarray
    residuals: np.ndarray
    clusters: np.ndarray
    tol: float
    sweeps: int

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def multiplicity(self, z: complex, radius: float = CLUSTER_TOL) -> int:
        """Number of eigenvalues within ``radius`` of ``z``."""
        return int(np.sum(np.abs(self.eigenvalues - z) <= radius))

    def cluster_multiplicities(self) -> dict[int, int]:
        ids, counts = np.unique(self.clusters, return_counts=True)
        return dict(zip(ids.tolist(), counts.tolist()))

    def cluster_centers(self) -> list[tuple[complex, int]]:
        """(mean value, size) for every cluster, in label order."""
        out = []
        for cid in range(int(self.clusters.max()) + 1 if len(self) else 0):
            members = self.eigenvalues[self.clusters == cid]
            out.append((complex(members.mean()), len(members)))
        return out

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals)) if len(self) else 0.0

    def to_records(self) -> list[dict]:
        return [
            {"re": float(z.real), "im": float(z.imag), "residual": float(r),
             "cluster_id": int(c)}
            for z, r, c in zip(self.eigenvalues, self.residuals, self.clusters)
        ]


def eigenvalues(m, tol: float | None = None, cluster_tol: float = CLUSTER_TOL,
                residuals: bool = True) -> Spectrum:
    """All ``n`` eigenvalues of a real square matrix.

    Balancing, Householder Hessenberg reduction and the implicit double-shift
    QR iteration.  Complex eigenvalues come out in exactly conjugate pairs.

    Parameters
    ----------
    m : array_like (n, n)
    tol : float, optional
        Relative residual tolerance (default ``EIG_TOL``); the absolute bound
        is ``tol * max(1, ||M||_F)``.
    cluster_tol : float
        Radius used to group numerically coincident eigenvalues.
    residuals : bool
        Run inverse iteration for every eigenvalue and record its residual.

    Raises
    ------
    NoConvergence
        When the QR iteration needs more than ``100 n`` sweeps.
    """
    a = as_float_matrix(m)
    n = a.shape[0]
    atol = absolute_tol(a, tol)
    ev, sweeps = _kernels.eigvals_dense(a, max_sweeps_for(n))
    if sweeps < 0:
        raise NoConvergence(f"QR iteration did not converge within {max_sweeps_for(n)} sweeps")
    if residuals:
        res = np.array([_residual(a, z) for z in ev])
    else:
        res = np.full(n, np.nan)
    return Spectrum(ev, res, cluster_ids(ev, cluster_tol), atol, int(sweeps))


def eigenvalues_batch(stack: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues for an (N, n, n) stack; returns (values (N, n), ok (N,))."""
    stack = np.ascontiguousarray(stack, dtype=np.float64)
    ev, status = _kernels.eigvals_batch(stack, max_sweeps_for(stack.shape[1]))
    return ev, status >= 0


def _residual(a: np.ndarray, lam: complex) -> float:
    _, res = _inverse_iteration(a, lam)
    return res


def _inverse_iteration(a: np.ndarray, lam: complex, iterations: int = 3):
    floor = np.finfo(float).eps * max(1.0, float(np.linalg.norm(a)))
    v, res = _kernels.inverse_iteration(a, complex(lam), floor, iterations)
    return v, float(res)


def eigenvector_for(m, lam: complex, tol: float | None = None) -> np.ndarray:
    """Unit eigenvector of ``m`` for the eigenvalue ``lam`` (inverse iteration).

    The phase is normalized so that the largest-modulus entry is real and
    positive.

    Raises
    ------
    NotAnEigenvalue
        If no vector reaches ``||M v - lam v|| <= tol * max(1, ||M||_F)``.
    """
    a = as_float_matrix(m)
    atol = absolute_tol(a, tol)
    v, res = _inverse_iteration(a, lam)
    if not res <= atol:
        raise NotAnEigenvalue(f"{lam} is not an eigenvalue: residual {res:.3e} > {atol:.3e}")
    k = int(np.argmax(np.abs(v)))
    return v * (abs(v[k]) / v[k])


def spectral_radius(m, tol: float | None = None) -> float:
    spec = eigenvalues(m, tol, residuals=False)
    return float(np.max(np.abs(spec.eigenvalues))) if len(spec) else 0.0
