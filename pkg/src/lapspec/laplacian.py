"""Laplacian constructions: L(G), standardization, J, K, P, complements,
the circulant Q and the L_k family.

Every standardized Laplacian carries a float64 matrix; when it was built
from rational data it also carries the exact matrix as an object array of
Fractions, which the exact verifiers use.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import BadIndex, ExactModeRequired, InvariantViolation, NotConvex
from .graph import WeightedDigraph
from .linalg.poly import is_exact_matrix

#: absolute tolerance for row sums and entry bounds in float mode
VALIDATION_TOL = 1e-12


def _exact_zeros(n: int) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    out[...] = Fraction(0)
    return out


def _exact_eye(n: int) -> np.ndarray:
    out = _exact_zeros(n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def _as_float(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=object).astype(float) if a.dtype == object else a


@dataclass(frozen=True)
class StandardizedLaplacian:
    """Laplacian with off-diagonal entries in ``[-1/n, 0]``.

    ``provenance`` is a free-form tag for reports only.
    """

    matrix: np.ndarray
    exact: np.ndarray | None = field(default=None, compare=False)
    provenance: str = "unknown"

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)


def validate(matrix, tol: float = VALIDATION_TOL) -> None:
    """Raise :class:`InvariantViolation` unless ``matrix`` is a standardized
    Laplacian: zero row sums, off-diagonals in ``[-1/n, 0]``, diagonal in
    ``[0, 1 - 1/n]``.  Object arrays of Fractions are checked exactly."""
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvariantViolation(f"not square: shape {a.shape}")
    n = a.shape[0]
    if a.dtype == object:
        tol = 0
        lo = Fraction(-1, n)
        hi = 1 - Fraction(1, n)
    else:
        if not np.all(np.isfinite(a)):
            raise InvariantViolation("non-finite entries")
        lo = -1.0 / n
        hi = 1.0 - 1.0 / n
        off = a[~np.eye(n, dtype=bool)]
        diag = np.diag(a)
        if (np.all(np.abs(a.sum(axis=1)) <= tol) and np.all(off >= lo - tol)
                and np.all(off <= tol) and np.all(diag >= -tol) and np.all(diag <= hi + tol)):
            return
    for i in range(n):
        s = sum(a[i, j] for j in range(n)) if a.dtype == object else float(np.sum(a[i]))
        if abs(s) > tol:
            raise InvariantViolation(f"row {i} sums to {s}, not 0")
        for j in range(n):
            x = a[i, j]
            if i == j:
                if x < -tol or x > hi + tol:
                    raise InvariantViolation(f"diagonal entry ({i},{i}) = {x} outside [0, {hi}]")
            elif x < lo - tol or x > tol:
                raise InvariantViolation(f"entry ({i},{j}) = {x} outside [{lo}, 0]")


def make_standardized(matrix, provenance: str = "matrix", exact=None,
                      tol: float = VALIDATION_TOL) -> StandardizedLaplacian:
    """Validate and wrap a matrix.  Fraction input also fills ``exact``."""
    if exact is None and is_exact_matrix(np.asarray(matrix)):
        exact = np.vectorize(Fraction, otypes=[object])(np.asarray(matrix))
    if exact is not None:
        validate(exact)
        fl = _as_float(np.asarray(exact, dtype=object))
    else:
        fl = np.array(matrix, dtype=np.float64)
    validate(fl, tol)
    fl.setflags(write=False)
    return StandardizedLaplacian(fl, exact, provenance)


def laplacian_of(g: WeightedDigraph) -> np.ndarray:
    """``l_ij = -w_ij`` off the diagonal, rows summing to zero.

    Rational weights give a Fraction object array, anything else float64.
    """
    n = g.n
    if g.is_exact:
        out = _exact_zeros(n)
        for i, j, w in g.arcs:
            out[i, j] = -Fraction(w)
            out[i, i] += Fraction(w)
        return out
    out = np.zeros((n, n))
    for i, j, w in g.arcs:
        out[i, j] = -float(w)
    out[np.diag_indices(n)] = -out.sum(axis=1)
    return out


def standardize(g: WeightedDigraph) -> StandardizedLaplacian:
    """``L(G) / (n b)``, exact whenever the weights are rational."""
    lap = laplacian_of(g)
    n = g.n
    if lap.dtype == object:
        exact = lap / (n * Fraction(g.b))
        return make_standardized(None, "from-digraph", exact=exact)
    return make_standardized(lap / (n * float(g.b)), "from-digraph")


def j_bar(n: int, exact: bool = False) -> np.ndarray:
    """Matrix with every entry ``1/n``."""
    if n < 1:
        raise BadIndex(f"n must be >= 1, got {n}")
    if exact:
        out = np.empty((n, n), dtype=object)
        out[...] = Fraction(1, n)
        return out
    return np.full((n, n), 1.0 / n)


def k_tilde(n: int, exact: bool = False) -> np.ndarray:
    """``I - J``: the standardized Laplacian of the complete digraph."""
    if exact:
        return _exact_eye(n) - j_bar(n, exact=True)
    return np.eye(n) - j_bar(n)


def k_tilde_laplacian(n: int) -> StandardizedLaplacian:
    return make_standardized(None, "complete", exact=k_tilde(n, exact=True))


def zero_laplacian(n: int) -> StandardizedLaplacian:
    return make_standardized(None, "empty", exact=_exact_zeros(n))


def stochastic_companion(lap: StandardizedLaplacian, exact: bool = False,
                         tol: float = VALIDATION_TOL) -> np.ndarray:
    """``P = L + J``; checked to be nonnegative with unit row sums."""
    if exact:
        if lap.exact is None:
            raise ExactModeRequired("exact P needs an exact laplacian")
        p = lap.exact + j_bar(lap.n, exact=True)
        bad = any(x < 0 for x in p.flat) or any(sum(row) != 1 for row in p)
    else:
        p = lap.matrix + j_bar(lap.n)
        bad = bool(np.any(p < -tol) or np.any(np.abs(p.sum(axis=1) - 1) > tol))
    if bad:
        raise InvariantViolation("L + J is not stochastic")
    return p


def complementary_laplacian(lap: StandardizedLaplacian) -> StandardizedLaplacian:
    """``K - L``, the standardized Laplacian of the complementary digraph."""
    n = lap.n
    exact = None if lap.exact is None else k_tilde(n, exact=True) - lap.exact
    if exact is not None:
        return make_standardized(None, "complement", exact=exact)
    return make_standardized(k_tilde(n) - lap.matrix, "complement")


def circulant_q(n: int, exact: bool = False) -> np.ndarray:
    """Cyclic permutation matrix: ``q_kj = 1`` iff ``j - k`` is 1 or ``1 - n``."""
    if n < 2:
        raise BadIndex(f"circulant Q needs n >= 2, got {n}")
    q = np.zeros((n, n), dtype=int)
    for k in range(n):
        q[k, (k + 1) % n] = 1
    if exact:
        return q.astype(object) * Fraction(1)
    return q.astype(float)


def l_k_matrix(n: int, k: int) -> StandardizedLaplacian:
    """``(k I - Q - Q^2 - ... - Q^k) / n`` for ``1 <= k <= n-1``.

    ``k = 0`` is accepted and gives the zero matrix (the polygon vertex 0).
    """
    if not (0 <= k <= n - 1):
        raise BadIndex(f"k must lie in [1, {n - 1}], got {k}")
    if k == 0:
        return make_standardized(None, "L_0", exact=_exact_zeros(n))
    out = _exact_zeros(n)
    step = Fraction(1, n)
    for i in range(n):
        out[i, i] = k * step
        for s in range(1, k + 1):
            out[i, (i + s) % n] -= step
    return make_standardized(None, f"L_{k}", exact=out)


def cycle_laplacian(n: int) -> StandardizedLaplacian:
    """``(I - Q) / n``, the standardized Laplacian of the n-cycle."""
    return l_k_matrix(n, 1)


def convex_combination(coeffs: Sequence[float], matrices: Sequence[StandardizedLaplacian],
                       tol: float = VALIDATION_TOL) -> StandardizedLaplacian:
    """``sum c_i M_i`` for nonnegative weights summing to one.

    Exact whenever every coefficient is rational and every input is exact.
    """
    if len(coeffs) != len(matrices) or not matrices:
        raise ValueError("need one coefficient per matrix")
    n = matrices[0].n
    if any(m.n != n for m in matrices):
        raise ValueError("matrices have different orders")
    if any(c < 0 for c in coeffs):
        raise NotConvex(f"negative coefficient in {list(coeffs)}")
    exact = all(isinstance(c, (int, Fraction)) for c in coeffs) and all(
        m.exact is not None for m in matrices)
    if exact:
        if sum(coeffs) != 1:
            raise NotConvex(f"coefficients sum to {sum(coeffs)}")
        acc = _exact_zeros(n)
        for c, m in zip(coeffs, matrices):
            acc = acc + Fraction(c) * m.exact
        return make_standardized(None, "convex-combination", exact=acc)
    if abs(float(sum(coeffs)) - 1.0) > tol:
        raise NotConvex(f"coefficients sum to {float(sum(coeffs))}")
    acc = np.zeros((n, n))
    for c, m in zip(coeffs, matrices):
        acc += float(c) * m.matrix
    return make_standardized(acc, "convex-combination", tol=tol)
