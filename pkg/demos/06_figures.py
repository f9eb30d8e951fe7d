"""
SVG figures
===========

Writes the region, polygon, overlay and cycloid figures next to this script.
"""
from pathlib import Path

from lapspec.explorer import emit_figure

out = Path(__file__).with_name("figures")
out.mkdir(exist_ok=True)
for kind, n in [("region", 5), ("polygon", 7), ("overlay", 5), ("cycloid", 32)]:
    print("wrote", emit_figure(kind, n, out / f"{kind}_n{n}.svg"))
