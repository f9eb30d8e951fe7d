"""
Digraphs, in-forests and standardized Laplacians
=================================================

A weighted digraph with arc weights at most b gives the Laplacian
L = diag(out-weights) - A.  Dividing by n*b puts every off-diagonal entry
in [-1/n, 0].
"""
from fractions import Fraction

import numpy as np

from lapspec.graph import complement, condensation, in_forest_dimension, new_digraph
from lapspec.laplacian import complementary_laplacian, standardize, stochastic_companion

# two converging trees: 0 -> 1 <- 2 and 3 -> 4
g = new_digraph(5, [(0, 1, Fraction(1, 2)), (2, 1, 1), (3, 4, Fraction(1, 3))], b=1)
print("sink components:", condensation(g).sinks)
print("in-forest dimension d =", in_forest_dimension(g))

lap = standardize(g)
print("standardized Laplacian (exact):")
print(lap.exact)

# complement: absent arcs get weight b, present arcs b - w
gc = complement(g)
print("complement in-forest dimension d_c =", in_forest_dimension(gc))

# P = L + J/n is row stochastic, Lc = (I - J/n) - L is the complement's Laplacian
P = stochastic_companion(lap)
print("row sums of P:", np.round(P.sum(axis=1), 12))
lc = complementary_laplacian(lap)
print("Lc equals standardize(complement):",
      np.allclose(lc.matrix, standardize(gc).matrix))
