"""Exact rank and null spaces over the rationals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .poly import _integer_scaling, to_exact


def exact_rank(m) -> int:
    """Rank of a rational matrix via fraction-free (Bareiss) elimination."""
    a, _ = _integer_scaling(to_exact(m))
    rows = [list(r) for r in a]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, nr):
            f = rows[r][col]
            rows[r] = [(p * rows[r][c] - f * rows[rank][c]) // prev for c in range(nc)]
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def exact_nullspace(m) -> list[np.ndarray]:
    """Basis of the right null space of a rational matrix (Fraction vectors).

    Gauss-Jordan on the integer-scaled rows; each row is divided by the gcd
    of its entries after every update to keep the integers small.
    """
    a, _ = _integer_scaling(to_exact(m))
    nr, nc = a.shape
    rows = [list(r) for r in a]
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(nr):
            f = rows[i][c]
            if i != r and f != 0:
                row = [p * x - f * y for x, y in zip(rows[i], rows[r])]
                g = gcd(*row)
                rows[i] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == nr:
            break
    pivot_set = set(pivots)
    basis = []
    for fc in (c for c in range(nc) if c not in pivot_set):
        v = np.array([Fraction(0)] * nc, dtype=object)
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = Fraction(-rows[i][fc], rows[i][pc])
        basis.append(v)
    return basis
