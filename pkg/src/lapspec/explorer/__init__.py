"""Random instances, conjecture trials, verification runs and figures."""
from .conjecture import ConjectureReport, TrialConfig, run_conjecture
from .figures import emit_figure
from .sampling import sample_digraph, sample_offdiagonal, sample_standardized, trial_rng
from .suite import run_verify_suite

__all__ = [
    "ConjectureReport", "TrialConfig", "emit_figure", "run_conjecture", "run_verify_suite",
    "sample_digraph", "sample_offdiagonal", "sample_standardized", "trial_rng",
]
