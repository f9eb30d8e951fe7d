"""Seeded random standardized Laplacians and digraphs.

Every trial gets its own generator: Philox-4x64 (a counter-based bit
generator) keyed through ``numpy.random.SeedSequence((seed, trial))``.
A trial therefore reproduces bit-for-bit on its own, whatever order or
thread the trials run in.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..graph import WeightedDigraph, new_digraph
from ..laplacian import StandardizedLaplacian, make_standardized


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence((seed, trial))))


def sample_offdiagonal(n: int, rng: np.random.Generator, density: float = 1.0) -> np.ndarray:
    """Float matrix with off-diagonals in ``[-1/n, 0]`` and zero row sums.

    Each off-diagonal entry is kept with probability ``density`` (always,
    when ``density >= 1``) and is then uniform on ``(-1/n, 0]``.
    """
    a = -rng.uniform(0.0, 1.0, size=(n, n)) / n
    if density < 1.0:
        keep = rng.uniform(0.0, 1.0, size=(n, n)) < density
        a = np.where(keep, a, 0.0)
    np.fill_diagonal(a, 0.0)
    np.fill_diagonal(a, -a.sum(axis=1))
    return a


def sample_standardized(n: int, rng: np.random.Generator, density: float = 1.0,
                        levels: int | None = None) -> StandardizedLaplacian:
    """Random standardized Laplacian.

    With ``levels`` set, off-diagonal entries are ``-k / (n * levels)`` for a
    uniform integer ``k`` in ``[0, levels]`` and the result is exact.
    """
    if levels is None:
        tag = "sampled-dense" if density >= 1.0 else "sampled-sparse"
        return make_standardized(sample_offdiagonal(n, rng, density), tag)
    ks = rng.integers(0, levels + 1, size=(n, n))
    if density < 1.0:
        ks = np.where(rng.uniform(0.0, 1.0, size=(n, n)) < density, ks, 0)
    exact = np.empty((n, n), dtype=object)
    for i in range(n):
        row_sum = Fraction(0)
        for j in range(n):
            if i != j:
                exact[i, j] = Fraction(-int(ks[i, j]), n * levels)
                row_sum += exact[i, j]
        exact[i, i] = -row_sum
    return make_standardized(None, "sampled-rational", exact=exact)


def sample_digraph(n: int, rng: np.random.Generator, density: float = 0.5, b=1,
                   levels: int | None = None) -> WeightedDigraph:
    """Each ordered pair carries an arc with probability ``density``.

    Weights are uniform on ``(0, b]``; with ``levels`` they are drawn from
    ``b * k / levels``, ``k = 1..levels``, as exact Fractions, so arcs of full
    weight ``b`` (which vanish in the complement) occur with probability
    ``1 / levels``.
    """
    present = rng.uniform(0.0, 1.0, size=(n, n)) < density
    if levels is None:
        w = b * (1.0 - rng.uniform(0.0, 1.0, size=(n, n)))
    else:
        w = rng.integers(1, levels + 1, size=(n, n))
    arcs = []
    for i in range(n):
        for j in range(n):
            if i != j and present[i, j]:
                if levels is None:
                    arcs.append((i, j, float(w[i, j])))
                else:
                    arcs.append((i, j, Fraction(b) * Fraction(int(w[i, j]), levels)))
    return new_digraph(n, arcs, Fraction(b) if levels is not None else b)
