"""
Plotting satisfied-property regions
===================================

Every sample point of a 2-D space is classified with the exact sign test
and shaded per property.  The two-disc demo recovers the familiar pair of
overlapping discs; the orthant constructions show half-plane and
hyperplane-slice geometry.  Sampling density is cosmetic only.
"""

from fractions import Fraction
from pathlib import Path

from epipool.spaces import make_space
from epipool.svgplot import render_regions

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

jobs = [
    ("example1", Fraction(2), "two overlapping discs"),
    ("avg-strict-nonneg", Fraction(2), "coordinate half-planes on the nonnegative orthant"),
    ("max-weak-nonpos", Fraction(2), "boundary slices of the nonpositive orthant"),
    ("had-weak-reals", Fraction(2), "axis lines: only exact zeros satisfy"),
]

for name, extent, blurb in jobs:
    space = make_space(name, 2)
    # odd resolution keeps 0 on the sample grid, so boundary-only
    # regions (orthant faces, axis lines) are visible
    svg = render_regions(space, -extent, extent, resolution=241)
    target = out_dir / f"{name}.svg"
    target.write_text(svg)
    print(f"{target.name:24s} {blurb} ({len(svg)} bytes)")

print(f"\nwrote {len(jobs)} figures to {out_dir}")
