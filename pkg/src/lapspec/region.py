"""Where the eigenvalues of standardized Laplacians of order n can lie.

Membership predicates are written as *excess* functions: the largest
signed distance by which a point violates one of the defining half-planes,
disks or bands (negative inside).  A point is accepted when its excess is
at most ``geo_tol``; tolerances only ever enlarge a region.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OutsidePolygon
from .laplacian import StandardizedLaplacian, convex_combination, l_k_matrix, zero_laplacian
from .linalg import eigenvector_for

GEO_TOL = 1e-9


def _wedge_excess(w: np.ndarray, half_angle: float) -> np.ndarray:
    """Excess of ``w`` w.r.t. the closed wedge ``|arg w| <= half_angle``."""
    # inward unit normals of the two edge rays e^{+-i half_angle}
    n_up = np.exp(1j * (half_angle - math.pi / 2))
    n_dn = np.exp(1j * (math.pi / 2 - half_angle))
    e_up = -(n_up.real * w.real + n_up.imag * w.imag)
    e_dn = -(n_dn.real * w.real + n_dn.imag * w.imag)
    # guards the degenerate zero-width wedge against its mirror image
    e_axis = -w.real
    return np.maximum(np.maximum(e_up, e_dn), e_axis)


@dataclass(frozen=True)
class RegionR:
    """Intersection of two disks, two wedges and a horizontal band."""

    n: int
    centers: tuple[float, float] = field(init=False)
    radius: float = field(init=False)
    half_angle: float = field(init=False)
    band: float = field(init=False)

    def __post_init__(self):
        n = self.n
        if n < 2:
            raise ValueError(f"region R needs n >= 2, got {n}")
        object.__setattr__(self, "centers", (1.0 / n, 1.0 - 1.0 / n))
        object.__setattr__(self, "radius", 1.0 - 1.0 / n)
        object.__setattr__(self, "half_angle", math.pi / 2 - math.pi / n)
        object.__setattr__(self, "band", band_height(n))

    def excess(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        c0, c1 = self.centers
        parts = [
            np.abs(z - c0) - self.radius,
            np.abs(z - c1) - self.radius,
            _wedge_excess(z, self.half_angle),
            _wedge_excess(1.0 - z, self.half_angle),
            np.abs(z.imag) - self.band,
        ]
        return np.max(np.stack(parts), axis=0)

    def contains(self, z, geo_tol: float = GEO_TOL):
        return self.excess(z) <= geo_tol


def band_height(n: int) -> float:
    """``cot(pi / 2n) / 2n``."""
    return 1.0 / (2 * n) / math.tan(math.pi / (2 * n))


def region_r(n: int) -> RegionR:
    return RegionR(n)


def region_r_contains(region: RegionR | int, z, geo_tol: float = GEO_TOL):
    """Membership in region R; ``z`` may be a scalar or an array."""
    if not isinstance(region, RegionR):
        region = RegionR(int(region))
    out = region.contains(z, geo_tol)
    return bool(out) if np.ndim(out) == 0 else out


def prop1_excess(n: int, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    r = 1.0 - 1.0 / n
    return np.maximum(np.abs(z - r) - r, _wedge_excess(z, math.pi / 2 - math.pi / n))


def prop1_region_contains(n: int, z, geo_tol: float = GEO_TOL):
    """Disk of radius ``1 - 1/n`` about ``1 - 1/n`` met with ``|arg z| <= pi/2 - pi/n``."""
    out = prop1_excess(n, z) <= geo_tol
    return bool(out) if np.ndim(out) == 0 else out


def region_r_is_hexagon(n: int) -> bool:
    """True when R is the hexagon cut from the two wedges by the band,
    with neither disk touching it."""
    if n < 3:
        return False
    reg = RegionR(n)
    apex = 0.5 * math.tan(reg.half_angle)
    if reg.band >= apex - 1e-12:
        return False
    x = reg.band * math.tan(math.pi / n)
    corners = np.array([x + 1j * reg.band, 1 - x + 1j * reg.band])
    c0, c1 = reg.centers
    return bool(np.all(np.abs(corners - c0) <= reg.radius)
                and np.all(np.abs(corners - c1) <= reg.radius))


def boundary_by_rays(excess, center: complex, samples: int = 720,
                     reach: float = 2.0, steps: int = 60) -> np.ndarray:
    """Boundary points of a convex set given by an excess function, found by
    bisection along ``samples`` rays from an interior ``center``."""
    theta = 2 * math.pi * np.arange(samples) / samples
    dirs = np.exp(1j * theta)
    lo = np.zeros(samples)
    hi = np.full(samples, reach)
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        inside = excess(center + mid * dirs) <= 0
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
    return center + lo * dirs


# ---------------------------------------------------------------- polygon S

def polygon_vertex(n: int, k: int) -> complex:
    """Closed form ``k/n - sin(k pi/n)/(n sin(pi/n)) e^{-i (k+1) pi / n}``."""
    if k == 0:
        return 0j
    if k == n - 1:
        return 1 + 0j
    amp = math.sin(k * math.pi / n) / (n * math.sin(math.pi / n))
    ang = (k + 1) * math.pi / n
    return complex(k / n - amp * math.cos(ang), amp * math.sin(ang))


def polygon_vertex_sum(n: int, k: int) -> complex:
    """The same vertex as ``(k - mu - mu^2 - ... - mu^k) / n``, ``mu = e^{-2 pi i/n}``."""
    mu = np.exp(-2j * math.pi / n)
    return complex((k - np.sum(mu ** np.arange(1, k + 1))) / n)


@dataclass(frozen=True)
class PolygonS:
    """Convex polygon ``0, l_1, ..., l_{n-2}, 1, conj(l_{n-2}), ..., conj(l_1)``."""

    n: int
    upper: np.ndarray
    vertices: np.ndarray

    def excess(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        v = self.vertices
        if len(v) == 2:
            return _segment_distance(z, v[0], v[1])
        a = v
        b = np.roll(v, -1)
        d = b - a
        # inward unit normals: left of each edge for counter-clockwise order
        nrm = 1j * d / np.abs(d) * self._orientation
        w = z[..., None] - a
        dist = -(nrm.real * w.real + nrm.imag * w.imag)
        return np.max(dist, axis=-1)

    @property
    def _orientation(self) -> float:
        v = self.vertices
        area = np.sum(v.real * np.roll(v.imag, -1) - np.roll(v.real, -1) * v.imag)
        return 1.0 if area > 0 else -1.0

    def contains(self, z, geo_tol: float = GEO_TOL):
        return self.excess(z) <= geo_tol

    def distance(self, z) -> np.ndarray:
        """Euclidean distance from ``z`` to the polygon (0 inside)."""
        z = np.asarray(z, dtype=complex)
        v = self.vertices
        edge = np.min(np.stack([_segment_distance(z, v[i], v[(i + 1) % len(v)])
                                for i in range(len(v))]), axis=0)
        return np.where(self.excess(z) <= 0, 0.0, edge)

    def centroid(self) -> complex:
        return complex(np.mean(self.vertices))


def _segment_distance(z, a, b):
    d = b - a
    t = np.clip(((z - a) * np.conj(d)).real / (abs(d) ** 2), 0.0, 1.0)
    return np.abs(z - (a + t * d))


def polygon_s(n: int) -> PolygonS:
    """Polygon S of order ``n``; a segment ``[0, 1]`` for ``n = 2``."""
    if n < 2:
        raise ValueError(f"polygon S needs n >= 2, got {n}")
    upper = np.array([polygon_vertex(n, k) for k in range(n)])
    lower = np.conj(upper[-2:0:-1])
    return PolygonS(n, upper, np.concatenate([upper, lower]))


def polygon_contains(poly: PolygonS | int, z, geo_tol: float = GEO_TOL):
    if not isinstance(poly, PolygonS):
        poly = polygon_s(int(poly))
    out = poly.contains(z, geo_tol)
    return bool(out) if np.ndim(out) == 0 else out


def sample_polygon_points(poly: PolygonS, count: int, rng: np.random.Generator) -> np.ndarray:
    """Points distributed uniformly (by area) over S, via a triangle fan from 0."""
    v = poly.vertices
    if len(v) == 2:
        return rng.uniform(0.0, 1.0, count).astype(complex)
    a, b = v[1:-1], v[2:]
    areas = 0.5 * np.abs(a.real * b.imag - a.imag * b.real)
    tri = rng.choice(len(areas), size=count, p=areas / areas.sum())
    r1 = rng.uniform(size=count)
    r2 = rng.uniform(size=count)
    flip = r1 + r2 > 1
    r1 = np.where(flip, 1 - r1, r1)
    r2 = np.where(flip, 1 - r2, r2)
    return r1 * a[tri] + r2 * b[tri]


@dataclass(frozen=True)
class Witness:
    """``matrix = b L_k + c L_{k+1}`` (the zero matrix carries weight ``a``)."""

    matrix: StandardizedLaplacian
    k: int
    a: float
    b: float
    c: float
    conjugated: bool
    residual: float


WITNESS_RESIDUAL = 1e-8


def witness_matrix(n: int, s: complex, geo_tol: float = GEO_TOL) -> Witness:
    """A standardized Laplacian of order ``n`` having ``s`` as an eigenvalue.

    The ray from 0 through ``s`` leaves S through an edge ``[l_k, l_{k+1}]``
    of the upper chain; writing ``s`` as a convex combination of 0, ``l_k``
    and ``l_{k+1}`` gives the same combination of ``0``, ``L_k``,
    ``L_{k+1}``.  Points with negative imaginary part are conjugated first.

    Raises
    ------
    OutsidePolygon
        If ``s`` is not in S (up to ``geo_tol``).
    """
    s = complex(s)
    poly = polygon_s(n)
    if not poly.contains(s, geo_tol):
        raise OutsidePolygon(f"{s} lies outside S({n})")
    conj = s.imag < 0
    target = s.conjugate() if conj else s
    if target == 0:
        m = zero_laplacian(n)
        return Witness(m, 0, 1.0, 0.0, 0.0, conj, 0.0)
    upper = poly.upper
    for k in range(n - 1):
        p0, p1 = upper[k], upper[k + 1]
        d = p1 - p0
        # p0 + u d = t target
        det = d.real * (-target.imag) - d.imag * (-target.real)
        if det == 0:
            continue
        rx, ry = -p0.real, -p0.imag
        u = (rx * (-target.imag) - ry * (-target.real)) / det
        t = (d.real * ry - d.imag * rx) / det
        if t <= 0 or u < -1e-12 or u > 1 + 1e-12:
            continue
        u = min(max(u, 0.0), 1.0)
        t = max(t, 1.0)
        b, c = (1 - u) / t, u / t
        a = 1.0 - b - c
        mats = [zero_laplacian(n), l_k_matrix(n, k), l_k_matrix(n, k + 1)]
        m = convex_combination([max(a, 0.0), b, c], mats)
        vec = eigenvector_for(m.matrix, s, tol=WITNESS_RESIDUAL)
        res = float(np.linalg.norm(m.matrix @ vec - s * vec))
        return Witness(m, k, a, b, c, conj, res)
    raise OutsidePolygon(f"no edge of S({n}) met by the ray through {s}")


# ------------------------------------------------------------ asymptotics

def cycloid_point(tau: float) -> complex:
    """``((tau - sin tau) + i (1 - cos tau)) / 2 pi``."""
    return complex(tau - math.sin(tau), 1 - math.cos(tau)) / (2 * math.pi)


def _golden_section(f, lo: float, hi: float, tol: float = 1e-10) -> tuple[float, float]:
    g = (math.sqrt(5) - 1) / 2
    c = hi - g * (hi - lo)
    d = lo + g * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - g * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + g * (hi - lo)
            fd = f(d)
    x = 0.5 * (lo + hi)
    return x, f(x)


def distance_to_cycloid(z: complex, grid: int = 256) -> float:
    """Distance from ``z`` to the arch ``cycloid_point([0, 2 pi])``."""
    z = complex(z.real, abs(z.imag))
    taus = np.linspace(0.0, 2 * math.pi, grid + 1)
    pts = ((taus - np.sin(taus)) + 1j * (1 - np.cos(taus))) / (2 * math.pi)
    i = int(np.argmin(np.abs(pts - z)))
    lo = taus[max(i - 1, 0)]
    hi = taus[min(i + 1, grid)]
    _, dist = _golden_section(lambda t: abs(cycloid_point(t) - z), lo, hi)
    return min(dist, float(np.abs(pts[i] - z)))


def cycloid_gap(n: int) -> float:
    """Largest distance from a vertex of S(n) to the limiting cycloid arch."""
    poly = polygon_s(n)
    return max(distance_to_cycloid(v) for v in poly.upper)


@dataclass(frozen=True)
class ZBounds:
    """Bounds on the largest imaginary part of an order-n eigenvalue.

    ``z_exact`` is only known for odd ``n``.
    """

    band: float
    vertex_max: float
    z_exact: float | None


def z_bounds(n: int) -> ZBounds:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    vmax = max(polygon_vertex(n, k).imag for k in range(n))
    band = band_height(n)
    return ZBounds(band, vmax, band if n % 2 == 1 else None)
