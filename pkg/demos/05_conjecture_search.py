"""
Searching for eigenvalues outside S
===================================

Is every eigenvalue inside S?  The harness samples matrices with a
per-trial Philox stream, so the report does not depend on the thread count.
"""
from lapspec.explorer import TrialConfig, run_conjecture

cfg = TrialConfig(n=6, trials=5000, seed=7)
rep = run_conjecture(cfg, threads=1)
print(f"{rep.eigenvalues_tested} eigenvalues, {rep.violation_count} outside S, "
      f"closest approach {rep.max_outward_excess:.2e}, {rep.runtime:.1f}s")

sparse = run_conjecture(TrialConfig(n=6, trials=5000, seed=7, density=0.3,
                                    mode="sparse-digraph"), threads=2)
print("sparse mode clean:", sparse.clean)

# same seed, different thread count, same bytes
print("reproducible:", run_conjecture(cfg, threads=4).to_json() == rep.to_json())
