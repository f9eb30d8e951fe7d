"""Monte-Carlo search for eigenvalues outside the polygon S.

Open question being probed: is every eigenvalue of an order-n standardized
Laplacian inside S?  The converse inclusion is known (see
``region.witness_matrix``), so only the outward direction is sampled here.
As a sanity layer every eigenvalue is also tested against region R, which
is a theorem and must never fail.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from ..io import write_matrix
from ..linalg import CLUSTER_TOL, EIG_TOL, eigenvalues_batch
from ..region import GEO_TOL, RegionR, polygon_s
from .sampling import sample_offdiagonal, trial_rng

MODES = ("dense-uniform", "sparse-digraph")
CHUNK = 1024


@dataclass(frozen=True)
class TrialConfig:
    n: int
    trials: int
    seed: int = 0
    density: float = 1.0
    mode: str = "dense-uniform"
    cluster_tol: float = CLUSTER_TOL
    geo_tol: float = GEO_TOL
    eig_tol: float = EIG_TOL

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")

    @property
    def effective_density(self) -> float:
        return 1.0 if self.mode == "dense-uniform" else self.density


@dataclass
class ConjectureReport:
    config: TrialConfig
    eigenvalues_tested: int = 0
    inside: int = 0
    max_outward_excess: float = -np.inf
    region_r_failures: int = 0
    max_region_r_excess: float = -np.inf
    no_convergence: int = 0
    violations: list[dict] = field(default_factory=list)
    runtime: float = field(default=0.0, compare=False)

    @property
    def violation_count(self) -> int:
        return self.eigenvalues_tested - self.inside

    @property
    def max_violation_distance(self) -> float:
        return max((v["distance"] for v in self.violations), default=0.0)

    @property
    def clean(self) -> bool:
        return self.violation_count == 0 and self.region_r_failures == 0

    def merge(self, other: "ConjectureReport") -> "ConjectureReport":
        self.eigenvalues_tested += other.eigenvalues_tested
        self.inside += other.inside
        self.max_outward_excess = max(self.max_outward_excess, other.max_outward_excess)
        self.region_r_failures += other.region_r_failures
        self.max_region_r_excess = max(self.max_region_r_excess, other.max_region_r_excess)
        self.no_convergence += other.no_convergence
        self.violations.extend(other.violations)
        return self

    def to_dict(self) -> dict:
        """Everything except the wall-clock runtime, so that identical
        configurations serialize identically."""
        return {
            "config": asdict(self.config),
            "eigenvalues_tested": self.eigenvalues_tested,
            "inside": self.inside,
            "violations": self.violation_count,
            "max_outward_excess": float(self.max_outward_excess),
            "max_violation_distance": float(self.max_violation_distance),
            "region_r_failures": self.region_r_failures,
            "max_region_r_excess": float(self.max_region_r_excess),
            "no_convergence": self.no_convergence,
            "violation_records": sorted(self.violations, key=lambda v: (v["trial"], v["index"])),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def thread_count(requested: int | None = None) -> int:
    cap = os.environ.get("LAPSPEC_THREADS")
    n = requested or os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


def _run_chunk(cfg: TrialConfig, start: int, stop: int, out_dir: Path | None) -> ConjectureReport:
    n = cfg.n
    density = cfg.effective_density
    stack = np.empty((stop - start, n, n))
    for t in range(start, stop):
        stack[t - start] = sample_offdiagonal(n, trial_rng(cfg.seed, t), density)
    ev, ok = eigenvalues_batch(stack)
    rep = ConjectureReport(cfg)
    rep.no_convergence = int(np.sum(~ok))
    ev = ev[ok]
    trials = np.arange(start, stop)[ok]
    if ev.size == 0:
        return rep
    poly = polygon_s(n)
    s_excess = poly.excess(ev)
    r_excess = RegionR(n).excess(ev)
    rep.eigenvalues_tested = int(ev.size)
    rep.inside = int(np.sum(s_excess <= cfg.geo_tol))
    rep.max_outward_excess = float(np.max(s_excess))
    rep.region_r_failures = int(np.sum(r_excess > cfg.geo_tol))
    rep.max_region_r_excess = float(np.max(r_excess))
    for row, idx in zip(*np.nonzero(s_excess > cfg.geo_tol)):
        trial = int(trials[row])
        z = complex(ev[row, idx])
        record = {
            "trial": trial, "index": int(idx), "re": z.real, "im": z.imag,
            "distance": float(poly.distance(z)),
            "excess": float(s_excess[row, idx]),
            "in_region_r": bool(r_excess[row, idx] <= cfg.geo_tol),
        }
        if out_dir is not None:
            out_dir.mkdir(parents=True, exist_ok=True)
            stem = f"violation_n{n}_seed{cfg.seed}_trial{trial}_{idx}"
            write_matrix(stack[trial - start], out_dir / f"{stem}.csv")
            (out_dir / f"{stem}.json").write_text(json.dumps(
                {**record, "config": asdict(cfg), "matrix_file": f"{stem}.csv"}, indent=2))
            record["matrix_file"] = f"{stem}.csv"
        rep.violations.append(record)
    return rep


def run_conjecture(cfg: TrialConfig, threads: int | None = None,
                   out_dir: str | os.PathLike | None = None) -> ConjectureReport:
    """Sample ``cfg.trials`` matrices and test every eigenvalue against S.

    Violations are written to ``out_dir`` (matrix CSV plus a JSON stub) as
    soon as they are found.  The report does not depend on ``threads``.
    """
    t0 = time.perf_counter()
    out = Path(out_dir) if out_dir is not None else None
    bounds = [(s, min(s + CHUNK, cfg.trials)) for s in range(0, cfg.trials, CHUNK)]
    workers = thread_count(threads)
    if workers == 1 or len(bounds) == 1:
        parts = [_run_chunk(cfg, a, b, out) for a, b in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ab: _run_chunk(cfg, ab[0], ab[1], out), bounds))
    total = ConjectureReport(cfg)
    for part in parts:
        total.merge(part)
    total.runtime = time.perf_counter() - t0
    return total
