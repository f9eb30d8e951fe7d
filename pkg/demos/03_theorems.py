"""
Checking the spectral theorems on concrete matrices
===================================================

Each verifier returns a report of named checks with the measured value,
the threshold and a pass flag.
"""
from lapspec.explorer import sample_digraph, sample_standardized, trial_rng
from lapspec.graph import cycle_digraph
from lapspec.laplacian import l_k_matrix
from lapspec.theory import (
    verify_charpoly_identities,
    verify_hamiltonian_extremal,
    verify_multiplicities,
    verify_semiconvergence,
    verify_spectrum_correspondence,
)

lap = sample_standardized(7, trial_rng(3, 0), density=0.4)

# spectra of L, P = L + J/n and 1 - spec(Lc) coincide away from 0 and 1
print(verify_spectrum_correspondence(lap).summary())

# P^k converges, and the limit is the projector onto the in-forest directions
print(verify_semiconvergence(lap).summary())

# with rational entries the polynomial identities hold coefficient by coefficient
exact = sample_standardized(5, trial_rng(3, 1), levels=4)
print(verify_charpoly_identities(exact).summary())
print(verify_charpoly_identities(l_k_matrix(6, 2)).summary())

# multiplicities of 0 and 1 from the in-forest dimensions d and d_c
g = sample_digraph(6, trial_rng(3, 2), density=0.2, levels=3)
rep = verify_multiplicities(g, exact=True)
print(rep.summary())
print("d =", rep.witnesses["d"], "d_c =", rep.witnesses["d_c"])

# the equal-weight Hamiltonian cycle reaches the extreme argument
print(verify_hamiltonian_extremal(9).summary())
print(cycle_digraph(4).arcs)
