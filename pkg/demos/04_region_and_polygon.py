"""
Where the eigenvalues can be: region R and polygon S
====================================================

Region R (two disks, two sectors and a band) contains every eigenvalue.
The polygon S is realized: every point of S is an eigenvalue of some
standardized Laplacian, built here from two neighbouring L_k matrices.
"""
import math

import numpy as np

from lapspec.explorer import sample_standardized, trial_rng
from lapspec.linalg import eigenvalues
from lapspec.region import (
    cycloid_gap,
    polygon_contains,
    polygon_s,
    region_r,
    region_r_contains,
    witness_matrix,
    z_bounds,
)

n = 5
reg = region_r(n)
print("R:", reg)

ev = np.concatenate([eigenvalues(sample_standardized(n, trial_rng(4, t)).matrix).eigenvalues
                     for t in range(200)])
print("all inside R:", region_r_contains(n, ev).all(), " inside S:", polygon_contains(n, ev).all())

poly = polygon_s(n)
print("upper vertices of S:", np.round(poly.upper, 6))

# a witness for a point of S
w = witness_matrix(n, 0.4 + 0.2j)
print(f"witness uses L_{w.k} and L_{w.k + 1}, residual {w.residual:.1e}")
print(np.round(w.matrix.matrix, 4))

# the largest imaginary part z(n) and its limit 1/pi
for m in (3, 7, 101, 1001):
    print(m, z_bounds(m).z_exact, 1 / math.pi)

# S approaches a cycloid arch as n grows
for m in (4, 16, 64, 256):
    print(f"cycloid gap n={m}: {cycloid_gap(m):.2e}")
