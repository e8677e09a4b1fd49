"""The arc diagram Upsilon_(m): grow it, count its crossings, and compare with the closed forms.

    python demos/02_upsilon_arc_diagram.py [out.svg]
"""

import sys
from pathlib import Path

from aqcross import arcdiagram, formulas

for m in range(0, 7):
    D = arcdiagram.upsilon(m)
    L = formulas.arc_forms(m)
    prof = arcdiagram.cover_profile(D)
    print(
        f"m={m}: {D.size:4d} spine vertices, {len(D):5d} arcs, "
        f"crossings {arcdiagram.crossings(D):7d}, covers C+={prof.c_plus} (form {L.c_plus}) "
        f"C-={prof.c_minus} (form {L.c_minus})"
    )

# Crossings between the left-right arcs and the arcs inside the left half.
D = arcdiagram.upsilon(4)
print("nu(H, E_l) at m=4:", arcdiagram.crossings(D, "H", "E_l"), "closed form:", formulas.arc_forms(4).nu_h_el)

# Covering counts over the middle-crossing arcs of Upsilon_(1), per spine index.
prof = arcdiagram.cover_profile(arcdiagram.upsilon(1), "H")
for row in ("alpha", "beta", "gamma", "xi"):
    print(f"  {row:5s}", getattr(prof, row).tolist())

# The spine vertices are actual labels of AQ_{5+m}.
print("spine of Upsilon_(1):", arcdiagram.upsilon(1).spine_labels())

if len(sys.argv) > 1:
    Path(sys.argv[1]).write_text(arcdiagram.to_svg(arcdiagram.upsilon(2)))
    print("wrote", sys.argv[1])
