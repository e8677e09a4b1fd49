"""Lay out the eight columns with their straight edges and count black crossings geometrically.

    python demos/03_black_layout.py [out.svg]
"""

import sys
from pathlib import Path

from aqcross import blacklayout

L = blacklayout.layout_black(8)
print("columns:", ", ".join(f"{p}@x={c.x}" for p, c in L.columns.items()))
print("layout problems:", blacklayout.check_layout(L) or "none")

c = blacklayout.count_black(8, layout=L)
p = c.pairs[1]
print(
    f"pair 1: inside U1 {p.internal_u}, inside V1 {p.internal_v}, "
    f"straight/straight {p.straight_straight}, straight/arc {p.straight_arc_u}+{p.straight_arc_v}"
)
print(f"all four pairs: {c.total}  closed form: {blacklayout.black_closed_form(8)}")

# Only one choice of facing side reproduces the closed form.
print("with the other side facing:", blacklayout.count_black(8, facing=1, layout=L).total)

for n in range(9, 12):
    print(f"n={n}: geometric {blacklayout.count_black(n).total}, closed form {blacklayout.black_closed_form(n)}")

if len(sys.argv) > 1:
    Path(sys.argv[1]).write_text(blacklayout.to_svg(L))
    print("wrote", sys.argv[1])
