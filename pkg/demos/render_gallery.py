"""
Escape-time pictures
====================

Render a few filled Julia sets as PGM files next to this script.
"""

from pathlib import Path

from indy3 import Cubic, escape_time_grid
from indy3.io import write_pgm

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)

# connected, totally disconnected, and the real-segment case
for triple in [(7, 9, 3), (4, 3, 1), (9, 18, 9), (3, 3, 1)]:
    grid = escape_time_grid(Cubic(*triple), resolution=(480, 360), max_iter=150)
    path = out / ("julia_%d_%d_%d.pgm" % triple)
    write_pgm(grid, path)
    bounded = (grid.counts == grid.max_iter).mean()
    print(f"{triple}: {path.name}, {100 * bounded:.1f}% of pixels never escaped")
