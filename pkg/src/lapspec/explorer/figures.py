"""SVG figures of the eigenvalue regions.

Output is plain text built from fixed-precision coordinates, so the bytes
only depend on the arguments.
"""
from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from ..linalg import eigenvalues_batch
from ..region import RegionR, boundary_by_rays, cycloid_point, polygon_s, prop1_excess
from .sampling import sample_offdiagonal, trial_rng

KINDS = ("region", "polygon", "cycloid", "overlay")
WIDTH, HEIGHT, MARGIN = 800, 500, 40
DEFAULT_SAMPLES = 200

_HATCH = (
    '<defs><pattern id="hatch" patternUnits="userSpaceOnUse" width="8" height="8" '
    'patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="8" '
    'stroke="#4a6fa5" stroke-width="1.5"/></pattern></defs>'
)


class _Canvas:
    def __init__(self, points: np.ndarray):
        lo_x, hi_x = points.real.min(), points.real.max()
        lo_y, hi_y = points.imag.min(), points.imag.max()
        span_x = max(hi_x - lo_x, 1e-9)
        span_y = max(hi_y - lo_y, 1e-9)
        self.scale = min((WIDTH - 2 * MARGIN) / span_x, (HEIGHT - 2 * MARGIN) / span_y)
        self.cx = 0.5 * (lo_x + hi_x)
        self.cy = 0.5 * (lo_y + hi_y)
        self.items: list[str] = []

    def xy(self, z: complex) -> tuple[str, str]:
        x = WIDTH / 2 + (z.real - self.cx) * self.scale
        y = HEIGHT / 2 - (z.imag - self.cy) * self.scale
        return f"{x:.2f}", f"{y:.2f}"

    def path(self, pts, closed: bool, **style) -> None:
        coords = [" ".join(self.xy(complex(z))) for z in pts]
        d = "M " + " L ".join(coords) + (" Z" if closed else "")
        attrs = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in style.items())
        self.items.append(f'<path d="{d}" {attrs}/>')

    def dots(self, pts) -> None:
        for z in pts:
            x, y = self.xy(complex(z))
            self.items.append(f'<circle cx="{x}" cy="{y}" r="2" fill="#c0392b"/>')

    def axis(self) -> None:
        _, y = self.xy(0j)
        self.items.append(f'<line x1="0" y1="{y}" x2="{WIDTH}" y2="{y}" stroke="#999" stroke-width="0.5"/>')

    def render(self, title: str) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
                f'width="{WIDTH}" height="{HEIGHT}">')
        body = [head, f"<title>{title}</title>", _HATCH,
                f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>', *self.items, "</svg>"]
        return "\n".join(body) + "\n"


def _sampled_eigenvalues(n: int, samples: int, seed: int = 0) -> np.ndarray:
    stack = np.stack([sample_offdiagonal(n, trial_rng(seed, t), 1.0 if t % 2 else 0.5)
                      for t in range(samples)])
    ev, ok = eigenvalues_batch(stack)
    return ev[ok].ravel()


def _cycloid_arch(count: int = 400) -> np.ndarray:
    return np.array([cycloid_point(t) for t in np.linspace(0, 2 * math.pi, count)])


def figure_svg(kind: str, n: int, samples: int | None = None) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    outline = {"fill": "none", "stroke": "#222", "stroke_width": "1.5"}
    hatched = {"fill": "url(#hatch)", "stroke": "#4a6fa5", "stroke_width": "1"}
    if kind == "region":
        edge = boundary_by_rays(lambda z: prop1_excess(n, z), 1 - 1 / n)
        c = _Canvas(edge)
        c.axis()
        c.path(edge, True, **hatched)
        return c.render(f"disk-and-angle region, n={n}")

    poly = polygon_s(n)
    verts = poly.vertices
    if kind == "cycloid":
        arch = _cycloid_arch()
        c = _Canvas(np.concatenate([arch, np.conj(arch), verts]))
        c.axis()
        c.path(arch, False, fill="none", stroke="#7f8c8d", stroke_width="1", stroke_dasharray="4 3")
        c.path(np.conj(arch), False, fill="none", stroke="#7f8c8d", stroke_width="1",
               stroke_dasharray="4 3")
        c.path(verts, True, **outline)
        return c.render(f"polygon S and limit cycloid, n={n}")

    region = RegionR(n)
    edge = boundary_by_rays(region.excess, 0.5)
    c = _Canvas(np.concatenate([edge, verts]))
    c.axis()
    c.path(edge, True, **hatched)
    c.path(verts, True, **outline)
    count = samples if samples is not None else (DEFAULT_SAMPLES if kind == "overlay" else 0)
    if count:
        c.dots(_sampled_eigenvalues(n, count))
    return c.render(f"region R and polygon S, n={n}")


def emit_figure(kind: str, n: int, path, samples: int | None = None) -> Path:
    """Write the SVG for ``kind`` and return its path."""
    out = Path(path)
    out.write_text(figure_svg(kind, n, samples), encoding="utf-8")
    return out
