"""Executable checks of the structural theorems on concrete instances.

Each ``verify_*`` function returns a :class:`VerificationReport` whose
``passed`` flag is the conjunction of its individual checks.  Nothing here
proves anything; a failed check on a valid input points at a numerical or
construction bug.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .errors import ExactModeRequired
from .graph import WeightedDigraph, complement, in_forest_dimension, is_hamiltonian_cycle
from .laplacian import (
    StandardizedLaplacian,
    complementary_laplacian,
    cycle_laplacian,
    j_bar,
    k_tilde,
    make_standardized,
    standardize,
    stochastic_companion,
)
from .linalg import (
    CLUSTER_TOL,
    RANK_TOL,
    X,
    Divergent,
    char_poly,
    eigenvalues,
    eigenvector_for,
    exact_nullspace,
    exact_rank,
    index_of,
    matrix_power_limit,
    rank,
    rank_margin,
)
from .linalg import _kernels
from .region import GEO_TOL, RegionR, prop1_excess


@dataclass
class Check:
    name: str
    value: Any
    bound: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "value": _jsonable(self.value),
                "bound": _jsonable(self.bound), "pass": bool(self.passed)}


@dataclass
class VerificationReport:
    theorem: str
    checks: list[Check] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, value, bound, passed) -> Check:
        c = Check(name, value, bound, bool(passed))
        self.checks.append(c)
        return c

    def le(self, name, value, bound) -> Check:
        return self.add(name, value, bound, value <= bound)

    def eq(self, name, value, expected) -> Check:
        return self.add(name, value, expected, value == expected)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "pass": self.passed,
                "checks": [c.to_dict() for c in self.checks],
                "witnesses": _jsonable(self.witnesses)}

    def summary(self) -> str:
        lines = [f"{self.theorem}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'XX'}] {c.name}: {_fmt(c.value)} (bound {_fmt(c.bound)})")
        return "\n".join(lines)


def merge_reports(theorem: str, reports: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(theorem)
    for r in reports:
        for c in r.checks:
            out.checks.append(Check(f"{r.theorem}:{c.name}", c.value, c.bound, c.passed))
        if r.witnesses:
            out.witnesses[r.theorem] = r.witnesses
    return out


def _fmt(x):
    if isinstance(x, float):
        return f"{x:.3e}"
    return str(x)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else str(x)
    return x


def _as_laplacian(lap) -> StandardizedLaplacian:
    if isinstance(lap, StandardizedLaplacian):
        return lap
    return make_standardized(lap)


def _away_from_0_1(values: np.ndarray, radius: float) -> np.ndarray:
    keep = (np.abs(values) > radius) & (np.abs(values - 1) > radius)
    return values[keep]


def match_multisets(a: np.ndarray, b: np.ndarray) -> tuple[bool, float]:
    """Greedy minimum-distance pairing; returns (same size, max paired distance)."""
    if len(a) != len(b):
        return False, math.inf
    if len(a) == 0:
        return True, 0.0
    dist = np.abs(a[:, None] - b[None, :])
    order = np.argsort(dist, axis=None, kind="stable")
    used_a = np.zeros(len(a), bool)
    used_b = np.zeros(len(b), bool)
    worst = 0.0
    matched = 0
    for flat in order:
        i, j = divmod(int(flat), len(b))
        if used_a[i] or used_b[j]:
            continue
        used_a[i] = used_b[j] = True
        worst = max(worst, float(dist[i, j]))
        matched += 1
        if matched == len(a):
            break
    return True, worst


# ------------------------------------------------------------------ Thm 1

def verify_spectrum_correspondence(lap, tol: float = 1e-8, cluster_tol: float = CLUSTER_TOL,
                                   pair_tol: float | None = None,
                                   rank_tol: float = RANK_TOL) -> VerificationReport:
    """Away from 0 and 1 the spectra of L, P = L + J and 1 - spec(K - L)
    coincide, with eigenvectors related by ``x = (I - J/(1 - lam)) v``."""
    lap = _as_laplacian(lap)
    n = lap.n
    pair_tol = cluster_tol if pair_tol is None else pair_tol
    rep = VerificationReport("spectrum_correspondence")
    lm = lap.matrix
    p = stochastic_companion(lap)
    lc = complementary_laplacian(lap).matrix
    sl = _away_from_0_1(eigenvalues(lm, residuals=False).eigenvalues, cluster_tol)
    sp = _away_from_0_1(eigenvalues(p, residuals=False).eigenvalues, cluster_tol)
    sc = _away_from_0_1(1 - eigenvalues(lc, residuals=False).eigenvalues, cluster_tol)
    same, dp = match_multisets(sl, sp)
    rep.eq("count_L_vs_P", len(sp), len(sl))
    rep.le("pairing_L_vs_P", dp, pair_tol)
    same, dc = match_multisets(sl, sc)
    rep.eq("count_L_vs_1_minus_Lc", len(sc), len(sl))
    rep.le("pairing_L_vs_1_minus_Lc", dc, pair_tol)

    floor = np.finfo(float).eps * max(1.0, float(np.linalg.norm(lm)))
    worst_v = worst_p = worst_c = worst_rt = 0.0
    for lam in sl:
        v, res_v = _kernels.inverse_iteration(lm, complex(lam), floor, 3)
        x = v - v.mean() / (1 - lam)
        xn = np.linalg.norm(x)
        worst_v = max(worst_v, float(res_v))
        worst_p = max(worst_p, float(np.linalg.norm(p @ x - lam * x) / xn))
        worst_c = max(worst_c, float(np.linalg.norm(lc @ x - (1 - lam) * x) / xn))
        back = x - x.mean() / lam
        worst_rt = max(worst_rt, float(np.linalg.norm(back - v)))
    rep.le("eigvec_residual_L", worst_v, tol)
    rep.le("transform_residual_P", worst_p, tol)
    rep.le("transform_residual_Lc", worst_c, tol)
    rep.le("round_trip", worst_rt, tol)

    # geometric multiplicities, one representative per cluster
    mismatch = 0
    margin = math.inf
    eye = np.eye(n)
    reps = _cluster_representatives(sl, cluster_tol)
    for lam in reps:
        a = lm - lam * eye
        b = p - lam * eye
        c = lc - (1 - lam) * eye
        g = [n - rank(m, rank_tol) for m in (a, b, c)]
        margin = min(margin, *(rank_margin(m, rank_tol) for m in (a, b, c)))
        if len(set(g)) != 1:
            mismatch += 1
    rep.eq("geometric_multiplicity_mismatches", mismatch, 0)
    rep.witnesses["rank_decision_margin_log10"] = margin
    rep.witnesses["eigenvalues_checked"] = len(sl)
    return rep


def _cluster_representatives(values: np.ndarray, radius: float) -> list[complex]:
    out: list[complex] = []
    for z in values:
        if all(abs(z - r) > radius for r in out):
            out.append(complex(z))
    return out


# ------------------------------------------------------------------ Thm 2

def verify_charpoly_identities(lap) -> VerificationReport:
    """Exact identities between the characteristic polynomials of L, P, K - L:
    ``x f_P(x) = (x - 1) f_L(x)`` and
    ``(1 - x) f_Lc(x) = (-1)^(n-1) x f_L(1 - x)``, plus the reduced forms with
    the common factors cancelled."""
    lap = _as_laplacian(lap)
    if lap.exact is None:
        raise ExactModeRequired("characteristic-polynomial identities need exact entries")
    n = lap.n
    rep = VerificationReport("charpoly_identities")
    fl = char_poly(lap.exact, exact=True)
    fp = char_poly(stochastic_companion(lap, exact=True), exact=True)
    fc = char_poly(complementary_laplacian(lap).exact, exact=True)
    one_minus_x = 1 - X
    sign = -1 if (n - 1) % 2 else 1
    fl_reflected = fl.compose(one_minus_x)

    lhs1, rhs1 = X * fp, (X - 1) * fl
    rep.eq("x*fP == (x-1)*fL", _coeff_mismatch(lhs1, rhs1), 0)
    lhs2, rhs2 = one_minus_x * fc, sign * X * fl_reflected
    rep.eq("(1-x)*fLc == (-1)^(n-1)*x*fL(1-x)", _coeff_mismatch(lhs2, rhs2), 0)

    q, r = fl.deflate(0)
    rep.eq("fL(0) == 0", r, 0)
    rep.eq("fP == (x-1)*fL/x", _coeff_mismatch(fp, (X - 1) * q), 0)
    q2, r2 = fl_reflected.deflate(1)
    rep.eq("fL(1-x) vanishes at x=1", r2, 0)
    # fL(1-x) / (1-x) = -q2
    rep.eq("fLc == (-1)^(n-1)*x*fL(1-x)/(1-x)", _coeff_mismatch(fc, -sign * X * q2), 0)
    rep.eq("fL monic degree n", (fl.degree, fl.coeffs[-1]), (n, 1))
    rep.witnesses = {"f_L": list(fl.coeffs), "f_P": list(fp.coeffs), "f_Lc": list(fc.coeffs)}
    return rep


def _coeff_mismatch(a, b) -> int:
    m = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (m - len(a.coeffs))
    cb = b.coeffs + (0,) * (m - len(b.coeffs))
    return sum(1 for x, y in zip(ca, cb) if x != y)


# ------------------------------------------------------------------ Thm 3

def verify_semiconvergence(lap, tol: float = 1e-10, max_k: int = 10**6,
                           cluster_tol: float = CLUSTER_TOL,
                           rank_tol: float = RANK_TOL) -> VerificationReport:
    """``L^k`` and ``P^k`` converge; checked through the spectral conditions
    and by computing both limits and comparing ``lim L^k`` with
    ``(P - J) lim P^k``."""
    lap = _as_laplacian(lap)
    n = lap.n
    rep = VerificationReport("semiconvergence")
    lm = lap.matrix
    p = stochastic_companion(lap)
    ev = eigenvalues(p, residuals=False).eigenvalues
    rho = float(np.max(np.abs(ev)))
    rep.le("spectral_radius_P", rho, 1 + tol)
    near_circle = ev[np.abs(ev) >= 1 - tol]
    off = float(np.max(np.abs(near_circle - 1))) if len(near_circle) else 0.0
    rep.le("unimodular_eigenvalues_equal_1", off, cluster_tol)
    ip = np.eye(n) - p
    r1, r2 = rank(ip, rank_tol), rank(ip @ ip, rank_tol)
    rep.eq("rank(I-P)^2 == rank(I-P)", r2, r1)
    rep.add("index_L", index_of(lm, rank_tol), 1, index_of(lm, rank_tol) <= 1)

    lim_p = matrix_power_limit(p, tol, max_k)
    lim_l = matrix_power_limit(lm, tol, max_k)
    rep.add("limit_P_exists", not isinstance(lim_p, Divergent), True, not isinstance(lim_p, Divergent))
    rep.add("limit_L_exists", not isinstance(lim_l, Divergent), True, not isinstance(lim_l, Divergent))
    if isinstance(lim_p, Divergent) or isinstance(lim_l, Divergent):
        rep.witnesses["divergent"] = {"P": repr(lim_p) if isinstance(lim_p, Divergent) else None,
                                      "L": repr(lim_l) if isinstance(lim_l, Divergent) else None}
        return rep
    predicted = (p - j_bar(n)) @ lim_p
    err = float(np.max(np.sum(np.abs(lim_l - predicted), axis=1)))
    rep.le("lim L^k == (P - J) lim P^k", err, 10 * tol)
    rep.witnesses["limit_residual"] = err
    return rep


# ------------------------------------------------------------------ Thm 4

def verify_multiplicities(g: WeightedDigraph, exact: bool | None = None,
                          cluster_tol: float = CLUSTER_TOL, rank_tol: float = RANK_TOL,
                          tol: float = 1e-8) -> VerificationReport:
    """Multiplicities of 0 and 1 in L, P and K - L versus the in-forest
    dimensions ``d`` of ``g`` and ``d_c`` of its complement, semisimplicity of
    those eigenvalues, and the eigenvector maps through ``K``.

    Exact (rational) mode is used whenever the weights allow it unless
    ``exact=False``; it is the arbiter, and the float counts are reported in
    the witnesses for comparison.
    """
    lap = standardize(g)
    n = g.n
    use_exact = lap.exact is not None if exact is None else exact
    if use_exact and lap.exact is None:
        raise ExactModeRequired("exact multiplicities need rational weights")
    rep = VerificationReport("multiplicities")
    d = in_forest_dimension(g)
    dc = in_forest_dimension(complement(g))
    rep.witnesses.update({"d": d, "d_c": dc, "mode": "exact" if use_exact else "float"})

    lc_lap = complementary_laplacian(lap)
    float_mats = {"L": lap.matrix, "P": stochastic_companion(lap), "Lc": lc_lap.matrix}
    float_alg = {}
    for name, m in float_mats.items():
        spec = eigenvalues(m, residuals=False)
        float_alg[name] = (spec.multiplicity(0, cluster_tol), spec.multiplicity(1, cluster_tol))

    if use_exact:
        mats = {"L": lap.exact, "P": stochastic_companion(lap, exact=True), "Lc": lc_lap.exact}
        alg = {}
        geo = {}
        for name, m in mats.items():
            f = char_poly(m, exact=True)
            alg[name] = (f.vanishing_order(0), f.vanishing_order(1))
            eye = np.eye(n, dtype=int).astype(object)
            geo[name] = (n - exact_rank(m), n - exact_rank(m - eye))
    else:
        mats = float_mats
        alg = float_alg
        geo = {name: (n - rank(m, rank_tol), n - rank(m - np.eye(n), rank_tol))
               for name, m in mats.items()}

    rep.eq("d == n - rank(L)", d, n - (exact_rank(lap.exact) if use_exact else rank(lap.matrix, rank_tol)))
    rep.eq("m_L(0) == d", alg["L"][0], d)
    rep.eq("m_L(1) == d_c - 1", alg["L"][1], dc - 1)
    rep.eq("m_P(0) == d - 1", alg["P"][0], d - 1)
    rep.eq("m_P(1) == d_c", alg["P"][1], dc)
    rep.eq("m_Lc(1) == d - 1", alg["Lc"][1], d - 1)
    rep.eq("m_Lc(0) == d_c", alg["Lc"][0], dc)
    for name in ("L", "P", "Lc"):
        for idx, lam in enumerate((0, 1)):
            rep.eq(f"semisimple {name} at {lam}", geo[name][idx], alg[name][idx])
    rep.witnesses["algebraic"] = alg
    rep.witnesses["float_algebraic"] = float_alg
    rep.witnesses["float_agrees"] = float_alg == alg

    # (iv): K v in V_P(0) for v in V_L(0); K x in V_L(1) for x in V_P(1)
    if use_exact:
        k = k_tilde(n, exact=True)
        p_e = mats["P"]
        eye = np.eye(n, dtype=int).astype(object)
        bad = 0
        for v in exact_nullspace(lap.exact):
            kv = k.dot(v)
            if any(x != 0 for x in kv):
                bad += any(x != 0 for x in p_e.dot(kv))
                bad += any(x != 0 for x in lc_lap.exact.dot(kv) - kv)
        rep.eq("K V_L(0) in V_P(0) = V_Lc(1)", bad, 0)
        bad = 0
        for x in exact_nullspace(p_e - eye):
            kx = k.dot(x)
            if any(y != 0 for y in kx):
                bad += any(y != 0 for y in lap.exact.dot(kx) - kx)
        rep.eq("K V_P(1) in V_L(1)", bad, 0)
    else:
        k = k_tilde(n)
        p_f = float_mats["P"]
        worst = 0.0
        for v in _float_nullspace(lap.matrix, rank_tol):
            kv = k @ v
            if np.linalg.norm(kv) > 1e-8 * np.linalg.norm(v):
                worst = max(worst, np.linalg.norm(p_f @ kv) / np.linalg.norm(kv),
                            np.linalg.norm(lc_lap.matrix @ kv - kv) / np.linalg.norm(kv))
        rep.le("K V_L(0) in V_P(0) = V_Lc(1)", float(worst), tol)
        worst = 0.0
        for x in _float_nullspace(p_f - np.eye(n), rank_tol):
            kx = k @ x
            if np.linalg.norm(kx) > 1e-8 * np.linalg.norm(x):
                worst = max(worst, np.linalg.norm(lap.matrix @ kx - kx) / np.linalg.norm(kx))
        rep.le("K V_P(1) in V_L(1)", float(worst), tol)
    return rep


def _float_nullspace(m: np.ndarray, rank_tol: float) -> list[np.ndarray]:
    _, s, vh = np.linalg.svd(m)
    if s[0] == 0:
        return list(np.eye(m.shape[0]))
    r = int(np.sum(s > rank_tol * s[0]))
    return list(vh[r:].conj())


# --------------------------------------------------------------- Remark 2

def verify_hamiltonian_extremal(n: int, tol: float = 1e-9) -> VerificationReport:
    """The equal-weight n-cycle attains the extreme argument ``pi/2 - pi/n``
    with a unique eigenvalue of known modulus and imaginary part, whose
    eigenvector entries form a regular n-gon; its complement has the mirror
    eigenvalue on the segment ``[1, e^{2 pi i/n}]``."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rep = VerificationReport("hamiltonian_extremal")
    lap = cycle_laplacian(n)
    ev = eigenvalues(lap.matrix, residuals=False).eigenvalues
    theta = math.pi / 2 - math.pi / n
    nonzero = ev[np.abs(ev) > tol]
    args = np.angle(nonzero)
    hits = nonzero[np.abs(args - theta) <= tol]
    rep.eq("unique eigenvalue at arg pi/2 - pi/n", len(hits), 1)
    rep.le("no eigenvalue beyond the angle bound", float(np.max(np.abs(args)) - theta), tol)
    if len(hits) != 1:
        return rep
    lam = complex(hits[0])
    rep.le("|lam| == (2/n) sin(pi/n)", abs(abs(lam) - 2 / n * math.sin(math.pi / n)), tol)
    rep.le("Im lam == (1/n) sin(2 pi/n)", abs(lam.imag - math.sin(2 * math.pi / n) / n), tol)
    v = eigenvector_for(lap.matrix, lam)
    ratios = v / v[0]
    rep.le("eigenvector entries are n-th roots of unity",
           float(np.max(np.abs(ratios ** n - 1))), tol * n)
    gaps = np.abs(ratios[:, None] - ratios[None, :]) + 10 * np.eye(n)
    rep.le("roots are distinct (regular polygon)",
           float(2 * math.sin(math.pi / n) - np.min(gaps)), tol)

    lc = complementary_laplacian(lap).matrix
    evc = eigenvalues(lc, residuals=False).eigenvalues
    edge = np.exp(2j * math.pi / n) - 1
    # distance to the segment [1, e^{2 pi i/n}]
    t = np.clip(((evc - 1) * np.conj(edge)).real / abs(edge) ** 2, 0, 1)
    on_seg = evc[(np.abs(evc - 1 - t * edge) <= tol) & (np.abs(evc - 1) > tol)]
    rep.eq("complement: unique eigenvalue on [1, e^{2 pi i/n}]", len(on_seg), 1)
    if len(on_seg) == 1:
        rep.le("complement: Im == (1/n) sin(2 pi/n)",
               abs(on_seg[0].imag - math.sin(2 * math.pi / n) / n), tol)
    rep.witnesses["eigenvalue"] = lam
    return rep


# ------------------------------------------------------------ localization

def verify_localization(lap, geo_tol: float = GEO_TOL,
                        digraph: WeightedDigraph | None = None) -> VerificationReport:
    """Every eigenvalue lies in region R and in the wider disk-and-angle
    region; an eigenvalue on the extreme ray forces a Hamiltonian cycle."""
    lap = _as_laplacian(lap)
    n = lap.n
    rep = VerificationReport("localization")
    ev = eigenvalues(lap.matrix, residuals=False).eigenvalues
    if n >= 2:
        rep.le("max excess over region R", float(np.max(RegionR(n).excess(ev))), geo_tol)
        rep.le("max excess over disk-and-angle region", float(np.max(prop1_excess(n, ev))), geo_tol)
    if digraph is not None and n >= 3:
        theta = math.pi / 2 - math.pi / n
        nz = ev[np.abs(ev) > geo_tol]
        extreme = bool(np.any(np.abs(np.abs(np.angle(nz)) - theta) <= geo_tol))
        rep.add("extreme argument only for a Hamiltonian cycle", extreme,
                "implies hamiltonian", (not extreme) or is_hamiltonian_cycle(digraph))
    return rep
