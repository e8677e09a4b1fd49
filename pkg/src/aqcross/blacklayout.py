"""The black part of the global drawing: eight arc-diagram columns plus the
straight edges of dimension +-(n-1) between paired columns U_i and V_i.

Each column is a copy of Upsilon_(n-5) laid out vertically.  The side -1 of
every column faces its partner column, so a straight edge leaving spine
index p crosses exactly the side -1 arcs that cover p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from aqcross.aqcube import adjacent, build, dim, edges_between
from aqcross.arcdiagram import ArcDiagram, cover_profile, crossings, upsilon
from aqcross.partition import PART_NAMES, SPINE_SEEDS, X_POSITION, Y_ANCHORS, lift_spine, spine_reversed

# Side of each column's arcs that faces the partner column.
FACING_SIDE = -1


def spine_positions(m: int) -> list[Fraction]:
    """Positions of z_1..z_{4*2^m} in [1, 4] under thirds subdivision.

    pi(z_i) keeps z_i's position; hat(pi(z_i)) moves a third of the way
    toward z_i's partner z_{i+(-1)^(i-1)}.
    """
    pos = [Fraction(p) for p in (1, 2, 3, 4)]
    for _ in range(m):
        new = []
        for i0 in range(0, len(pos), 2):
            a, b = pos[i0], pos[i0 + 1]
            new += [a, a + (b - a) / 3, b - (b - a) / 3, b]
        pos = new
    return pos


def _y_map(part: str):
    y1, y2 = Y_ANCHORS[part][0], Y_ANCHORS[part][1]
    step = y2 - y1
    return lambda p: y1 + (p - 1) * step


@dataclass(frozen=True, eq=False)
class Column:
    part: str
    x: int
    diagram: ArcDiagram
    labels: list[int]
    y: list[Fraction]

    @property
    def partner(self) -> str:
        return ("V" if self.part[0] == "U" else "U") + self.part[1]

    def index_of(self) -> dict[int, int]:
        """Vertex label -> 1-based spine index."""
        return {a: i for i, a in enumerate(self.labels, start=1)}


@dataclass(frozen=True)
class Straight:
    u: int
    v: int
    dim: int
    pu: int  # spine index of u in its column
    pv: int


@dataclass(frozen=True, eq=False)
class BlackLayout:
    n: int
    columns: dict[str, Column]
    straight: dict[int, list[Straight]] = field(default_factory=dict)  # pair i -> edges

    @property
    def m(self) -> int:
        return self.n - 5


def layout_black(n: int) -> BlackLayout:
    """Build the eight columns and the straight edges for AQ_n (n >= 5)."""
    if n < 5:
        raise ValueError("needs n >= 5")
    m = n - 5
    D = upsilon(m)
    pos = spine_positions(m)
    columns = {}
    for part in PART_NAMES:
        ymap = _y_map(part)
        columns[part] = Column(part, X_POSITION[part], D, lift_spine(SPINE_SEEDS[part], 5, m), [ymap(p) for p in pos])
    size = D.size
    straight: dict[int, list[Straight]] = {}
    for i in range(1, 5):
        U, V = columns[f"U{i}"], columns[f"V{i}"]
        # spine index of u_{i,j} / v_{i,j}
        ju = (lambda j: size + 1 - j) if spine_reversed(U.part) else (lambda j: j)
        jv = (lambda j: size + 1 - j) if spine_reversed(V.part) else (lambda j: j)
        edges = []
        for j in range(1, size + 1):
            for k, d in ((j, -(n - 1)), (j + 1 if j % 2 else j - 1, n - 1)):
                pu, pv = ju(j), jv(k)
                edges.append(Straight(U.labels[pu - 1], V.labels[pv - 1], d, pu, pv))
        straight[i] = edges
    return BlackLayout(n, columns, straight)


def check_layout(L: BlackLayout) -> list[str]:
    """Compare the layout with AQ_n itself; returns a list of problems."""
    cube = build(L.n)
    problems = []
    for part, col in L.columns.items():
        got = {tuple(sorted((col.labels[i - 1], col.labels[j - 1]))) for i, j, _ in col.diagram.arcs()}
        want = set(edges_between(cube, col.labels, col.labels))
        if got != want:
            problems.append(f"{part}: arc set differs from E({part})")
        steps = [b - a for a, b in zip(col.y, col.y[1:])]
        if not (all(d > 0 for d in steps) or all(d < 0 for d in steps)):
            problems.append(f"{part}: Y not monotone along the spine")
    for i, edges in L.straight.items():
        U, V = L.columns[f"U{i}"], L.columns[f"V{i}"]
        want = set(edges_between(cube, U.labels, V.labels))
        got = {tuple(sorted((e.u, e.v))) for e in edges}
        if got != want:
            problems.append(f"pair {i}: straight edges differ from E[U{i},V{i}]")
        for e in edges:
            if not adjacent(e.u, e.v) or dim(e.u, e.v) != e.dim:
                problems.append(f"pair {i}: edge {e} has wrong dimension")
                break
            if e.dim == -(L.n - 1) and abs(U.y[e.pu - 1]) != abs(V.y[e.pv - 1]):
                problems.append(f"pair {i}: dim -(n-1) edge {e} not horizontal")
                break
    return problems


def _segments(L: BlackLayout, i: int) -> np.ndarray:
    """Straight edges of pair i as integer rows (x1, y1, x2, y2), Y scaled exactly."""
    U, V = L.columns[f"U{i}"], L.columns[f"V{i}"]
    scale = lcm(*(y.denominator for y in U.y + V.y))
    rows = []
    for e in L.straight[i]:
        yu, yv = U.y[e.pu - 1] * scale, V.y[e.pv - 1] * scale
        assert yu.denominator == 1 and yv.denominator == 1
        rows.append((U.x * scale, int(yu), V.x * scale, int(yv)))
    return np.array(rows, dtype=object if scale > 10**6 else np.int64)


def _orient(ax, ay, bx, by, cx, cy):
    return np.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def segment_crossings(seg: np.ndarray) -> int:
    """Number of properly crossing pairs among integer segments."""
    total = 0
    x1, y1, x2, y2 = (seg[:, k] for k in range(4))
    for a in range(len(seg) - 1):
        b = slice(a + 1, None)
        o1 = _orient(x1[a], y1[a], x2[a], y2[a], x1[b], y1[b])
        o2 = _orient(x1[a], y1[a], x2[a], y2[a], x2[b], y2[b])
        o3 = _orient(x1[b], y1[b], x2[b], y2[b], x1[a], y1[a])
        o4 = _orient(x1[b], y1[b], x2[b], y2[b], x2[a], y2[a])
        total += int(np.count_nonzero((o1 * o2 < 0) & (o3 * o4 < 0)))
    return total


def straight_arc_crossings(col: Column, endpoints: list[int], facing: int = FACING_SIDE) -> int:
    """Each straight edge leaving spine index p crosses the facing-side arcs covering p."""
    prof = cover_profile(col.diagram)
    cover = prof.xi if facing == -1 else prof.gamma
    return int(sum(int(cover[p - 1]) for p in endpoints))


@dataclass(frozen=True)
class PairCount:
    internal_u: int
    internal_v: int
    straight_straight: int
    straight_arc_u: int
    straight_arc_v: int

    @property
    def total(self) -> int:
        return self.internal_u + self.internal_v + self.straight_straight + self.straight_arc_u + self.straight_arc_v


@dataclass(frozen=True)
class BlackCount:
    n: int
    pairs: dict[int, PairCount]

    @property
    def total(self) -> int:
        return sum(p.total for p in self.pairs.values())


def count_black(n: int, facing: int = FACING_SIDE, layout: BlackLayout | None = None) -> BlackCount:
    """Count crossings among black edges pair by pair from the geometry."""
    L = layout or layout_black(n)
    pairs = {}
    for i in range(1, 5):
        U, V = L.columns[f"U{i}"], L.columns[f"V{i}"]
        edges = L.straight[i]
        pairs[i] = PairCount(
            internal_u=crossings(U.diagram),
            internal_v=crossings(V.diagram),
            straight_straight=segment_crossings(_segments(L, i)),
            straight_arc_u=straight_arc_crossings(U, [e.pu for e in edges], facing),
            straight_arc_v=straight_arc_crossings(V, [e.pv for e in edges], facing),
        )
    return BlackCount(n, pairs)


def black_closed_form(n: int) -> int:
    par = 1 + (-1) ** (n - 1)
    return 59 * 2 ** (2 * n - 8) - (4 * n * n - 9 * n - 6) * 2 ** (n - 3) - 7 * par * 2 ** (n - 4)


def index_interleavings(L: BlackLayout, i: int) -> int:
    """Straight-edge pairs whose (u-index, v-index) orders disagree.

    Uses the naming index j on both sides, which increases with |Y|.
    """
    size = L.columns[f"U{i}"].diagram.size
    rev_u = spine_reversed(f"U{i}")
    rev_v = spine_reversed(f"V{i}")
    js = []
    for e in L.straight[i]:
        ju = size + 1 - e.pu if rev_u else e.pu
        jv = size + 1 - e.pv if rev_v else e.pv
        js.append((ju, jv))
    return sum(
        1
        for a in range(len(js))
        for b in range(a + 1, len(js))
        if (js[a][0] - js[b][0]) * (js[a][1] - js[b][1]) < 0
    )


# ---------------------------------------------------------------- SVG


def to_svg(L: BlackLayout, unit: float = 120.0, height: float = 900.0) -> str:
    """Columns as vertical spines, arcs bulging sideways, straight edges as lines."""
    ys = [y for col in L.columns.values() for y in col.y]
    ymax = float(max(abs(y) for y in ys))
    sy = (height - 60) / (2 * ymax)
    width = 5 * unit + 60

    def px(x, y):
        return 30 + (x + 2.5) * unit, 30 + (ymax - float(y)) * sy

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">'
    ]
    for i, edges in L.straight.items():
        U, V = L.columns[f"U{i}"], L.columns[f"V{i}"]
        for e in edges:
            x1, y1 = px(U.x, U.y[e.pu - 1])
            x2, y2 = px(V.x, V.y[e.pv - 1])
            out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#444" stroke-width="0.4"/>')
    for part in PART_NAMES:
        col = L.columns[part]
        toward = 1 if L.columns[col.partner].x > col.x else -1
        span_max = max(j - i for i, j, _ in col.diagram.arcs())
        for i, j, s in col.diagram.arcs():
            x, ya = px(col.x, col.y[i - 1])
            _, yb = px(col.x, col.y[j - 1])
            direction = toward if s == FACING_SIDE else -toward
            rx = 0.4 * unit * (j - i) / span_max
            ry = abs(yb - ya) / 2
            # sweep chosen so the bulge points along `direction`
            top, bottom = (ya, yb) if ya < yb else (yb, ya)
            sweep = 1 if direction == 1 else 0
            out.append(
                f'<path d="M {x:.2f} {top:.2f} A {rx:.2f} {ry:.2f} 0 0 {sweep} {x:.2f} {bottom:.2f}" '
                f'fill="none" stroke="black" stroke-width="0.4"/>'
            )
        for a, y in zip(col.labels, col.y):
            cx, cy = px(col.x, y)
            out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="1.6" fill="black"/>')
            out.append(f'<text x="{cx + 3:.2f}" y="{cy - 2:.2f}" font-size="5">{a}</text>')
        lx, ly = px(col.x, 0)
        out.append(f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="10" text-anchor="middle">{part}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
