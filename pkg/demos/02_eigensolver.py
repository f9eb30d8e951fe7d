"""
The dense eigensolver
=====================

Balancing, Hessenberg reduction and Francis double-shift QR, plus exact
characteristic polynomials for rational input.
"""
import numpy as np

from lapspec.explorer import sample_standardized, trial_rng
from lapspec.laplacian import cycle_laplacian
from lapspec.linalg import char_poly, eigenvalues, eigenvalues_batch, index_of, rank

lap = sample_standardized(6, trial_rng(0, 0), density=0.5)
spec = eigenvalues(lap.matrix)
for z, r in zip(spec.eigenvalues, spec.residuals):
    print(f"{z.real:+.6f} {z.imag:+.6f}i   residual {r:.1e}")

# same answers as LAPACK, up to ordering
ref = np.sort_complex(np.linalg.eigvals(lap.matrix))
print("max gap to numpy:", np.max(np.abs(np.sort_complex(spec.eigenvalues) - ref)))

# exact characteristic polynomial of the 5-cycle, coefficients are Fractions
print("char poly of the 5-cycle:", char_poly(cycle_laplacian(5).exact))

# rank and index: 0 is always a semisimple eigenvalue of a Laplacian
print("rank", rank(lap.matrix), "index", index_of(lap.matrix))

# many small matrices at once, as used by the Monte-Carlo search
stack = np.stack([sample_standardized(8, trial_rng(1, t)).matrix for t in range(1000)])
ev, ok = eigenvalues_batch(stack)
print(ev.shape, "converged:", ok.all())
