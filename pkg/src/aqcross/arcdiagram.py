"""The inductive arc diagram Upsilon_(m) and its crossing/covering statistics.

Spine indices are 1-based.  An arc (i, j, side) has i < j and side +1
(above the spine) or -1 (below).  Two arcs cross exactly when they are on
the same side and their endpoints strictly interleave.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from aqcross.partition import SPINE_SEEDS, lift_spine

SubsetSpec = Union[str, np.ndarray, Sequence[int], None]

BASE_ARCS = ((1, 2, -1), (3, 4, -1), (1, 3, 1), (2, 4, 1), (1, 4, 1), (2, 3, 1))


@dataclass(frozen=True, eq=False)
class ArcDiagram:
    """Arcs are stored as parallel arrays sorted by (lo, hi)."""

    m: int
    lo: np.ndarray
    hi: np.ndarray
    side: np.ndarray
    dim: np.ndarray
    N: int = 5

    @property
    def size(self) -> int:
        return 1 << (self.m + 2)

    def __len__(self) -> int:
        return len(self.lo)

    def arcs(self) -> list[tuple[int, int, int]]:
        return list(zip(self.lo.tolist(), self.hi.tolist(), self.side.tolist()))

    def sides(self) -> dict[tuple[int, int], int]:
        return {(i, j): s for i, j, s in self.arcs()}

    def dims(self) -> dict[tuple[int, int], int]:
        return dict(zip(zip(self.lo.tolist(), self.hi.tolist()), self.dim.tolist()))

    def spine_labels(self, seed: Sequence[int] | None = None) -> list[int]:
        """Vertex labels z_1..z_size in AQ_{N+m}, lifted from a seed in AQ_N."""
        if seed is None:
            if self.N != 5:
                raise ValueError("pass a seed quadruple when N != 5")
            seed = SPINE_SEEDS["U1"]
        return lift_spine(seed, self.N, self.m)


def _lift(arcs: dict, m: int, N: int) -> dict:
    """One step of the inductive rule: level m-1 -> level m."""
    size = 1 << (m + 1)  # spine size at level m-1
    nn = N + m - 1  # ambient dimension at level m-1

    def P(i):
        return 2 * i - 1 if i % 2 else 2 * i

    def H(i):
        return 2 * i if i % 2 else 2 * i - 1

    new = {}
    for i in range(1, size + 1, 2):
        side = arcs[(i, i + 1)][0]
        new[(2 * i - 1, 2 * i)] = (-side, -(nn - 1))
        new[(2 * i + 1, 2 * i + 2)] = (-side, -(nn - 1))
    for (k, l), (o, d) in arcs.items():
        if l == k + 1 and k % 2 == 1:
            new[(P(k), P(l))] = (o, d)
            new[(H(k), H(l))] = (o, d)
            new[(P(k), H(l))] = (o, nn - 1)
            new[(H(k), P(l))] = (o, nn - 1)
        else:
            flip = -1 if (l == k + 2 and k % 4 in (1, 2)) else 1
            new[tuple(sorted((P(k), P(l))))] = (flip * o, d)
            new[tuple(sorted((H(k), H(l))))] = (o, d)
    return new


@lru_cache(maxsize=None)
def upsilon(m: int, N: int = 5) -> ArcDiagram:
    """Build Upsilon_(m) from the six base arcs by m lifting steps."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if N < 5:
        raise ValueError("N must be >= 5")
    base_dim = {(1, 2): -(N - 2), (3, 4): -(N - 2), (1, 4): N - 2, (2, 3): N - 2, (1, 3): -(N - 3), (2, 4): -(N - 3)}
    arcs = {(i, j): (s, base_dim[(i, j)]) for i, j, s in BASE_ARCS}
    for level in range(1, m + 1):
        arcs = _lift(arcs, level, N)
    keys = sorted(arcs)
    lo = np.array([k[0] for k in keys], dtype=np.int64)
    hi = np.array([k[1] for k in keys], dtype=np.int64)
    side = np.array([arcs[k][0] for k in keys], dtype=np.int64)
    dim = np.array([arcs[k][1] for k in keys], dtype=np.int64)
    for a in (lo, hi, side, dim):
        a.setflags(write=False)
    return ArcDiagram(m, lo, hi, side, dim, N)


# ---------------------------------------------------------------- subsets

SUBSET_IDS = ("E", "E_l", "E_r", "H", "K") + tuple(f"E_{t}" for t in range(1, 9))


def interval(t: int, m: int) -> tuple[int, int]:
    """I_t^(m) = [(t-1)*2^(m-1)+1, t*2^(m-1)] as an inclusive pair (m >= 1)."""
    if m < 1:
        raise ValueError("intervals need m >= 1")
    if not 1 <= t <= 8:
        raise ValueError(f"interval index {t} outside [1, 8]")
    w = 1 << (m - 1)
    return (t - 1) * w + 1, t * w


def subset(D: ArcDiagram, F: SubsetSpec = "E") -> np.ndarray:
    """Boolean mask over D's arcs for a named subset, index list or mask."""
    if F is None or (isinstance(F, str) and F == "E"):
        return np.ones(len(D), dtype=bool)
    if isinstance(F, str):
        half = D.size // 2
        if F == "E_l":
            return D.hi <= half
        if F == "E_r":
            return D.lo > half
        if F == "H":
            return (D.lo <= half) & (D.hi > half)
        if F == "K":
            mask = np.ones(len(D), dtype=bool)
            for t in range(1, 9):
                mask &= ~subset(D, f"E_{t}")
            return mask
        if F.startswith("E_") and F[2:].isdigit() and 1 <= int(F[2:]) <= 8:
            a, b = interval(int(F[2:]), D.m)
            return (D.lo >= a) & (D.hi <= b)
        raise ValueError(f"unknown edge subset {F!r}")
    arr = np.asarray(F)
    if arr.dtype == bool:
        if arr.shape != (len(D),):
            raise ValueError("mask length does not match the arc count")
        return arr
    mask = np.zeros(len(D), dtype=bool)
    mask[arr.astype(np.int64)] = True
    return mask


# ---------------------------------------------------------------- crossings


def _directed(lo_a, hi_a, lo_b, hi_b) -> int:
    """#pairs (a, b) with lo_a < lo_b < hi_a < hi_b.  lo_b must be sorted."""
    total = 0
    left = np.searchsorted(lo_b, lo_a, side="right")
    right = np.searchsorted(lo_b, hi_a, side="left")
    for x, l, r in zip(hi_a.tolist(), left.tolist(), right.tolist()):
        if r > l:
            total += int(np.count_nonzero(hi_b[l:r] > x))
    return total


def count_crossings(
    lo_a: np.ndarray, hi_a: np.ndarray, side_a: np.ndarray,
    lo_b: np.ndarray | None = None, hi_b: np.ndarray | None = None, side_b: np.ndarray | None = None,
) -> int:
    """Same-side interleaving pairs within one arc set, or across two.

    Every candidate pair is tested: for each arc a we look at the arcs whose
    left end lies strictly inside a and count those that leave it on the
    right.
    """
    total = 0
    for s in (1, -1):
        ma = side_a == s
        la, ha = lo_a[ma], hi_a[ma]
        if lo_b is None:
            order = np.argsort(la, kind="stable")
            total += _directed(la, ha, la[order], ha[order])
        else:
            mb = side_b == s
            lb, hb = lo_b[mb], hi_b[mb]
            ob = np.argsort(lb, kind="stable")
            oa = np.argsort(la, kind="stable")
            total += _directed(la, ha, lb[ob], hb[ob]) + _directed(lb, hb, la[oa], ha[oa])
    return total


def crossings_naive(arcs_a, arcs_b=None) -> int:
    """Pure-python double loop over (lo, hi, side) triples; test oracle."""

    def cross(p, q):
        (i, j, s), (k, l, t) = p, q
        return s == t and (i < k < j < l or k < i < l < j)

    if arcs_b is None:
        arcs_a = list(arcs_a)
        return sum(cross(arcs_a[x], arcs_a[y]) for x in range(len(arcs_a)) for y in range(x + 1, len(arcs_a)))
    return sum(cross(p, q) for p in arcs_a for q in arcs_b)


def crossings(D: ArcDiagram, A: SubsetSpec = "E", B: SubsetSpec = None) -> int:
    """nu(A) in D, or nu(A, B) when B is given (A and B must be disjoint)."""
    ma = subset(D, A)
    if B is None:
        return count_crossings(D.lo[ma], D.hi[ma], D.side[ma])
    mb = subset(D, B)
    if np.any(ma & mb):
        raise ValueError("edge subsets overlap")
    return count_crossings(D.lo[ma], D.hi[ma], D.side[ma], D.lo[mb], D.hi[mb], D.side[mb])


# ---------------------------------------------------------------- covering


@dataclass(frozen=True, eq=False)
class CoverProfile:
    """Per-index counts for an arc subset; entry 0 is index 1.

    alpha/beta: arcs incident to the index on side +1/-1.
    gamma/xi: arcs strictly covering the index on side +1/-1.
    """

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    xi: np.ndarray

    @property
    def c_plus(self) -> int:
        return int(self.gamma.sum())

    @property
    def c_minus(self) -> int:
        return int(self.xi.sum())


def _covers(lo, hi, size) -> np.ndarray:
    diff = np.zeros(size + 2, dtype=np.int64)
    np.add.at(diff, lo + 1, 1)
    np.add.at(diff, hi, -1)
    return np.cumsum(diff)[1 : size + 1]


def _incidence(lo, hi, size) -> np.ndarray:
    return np.bincount(np.concatenate([lo, hi]), minlength=size + 1)[1:].astype(np.int64)


def cover_profile(D: ArcDiagram, F: SubsetSpec = "E") -> CoverProfile:
    mask = subset(D, F)
    up = mask & (D.side == 1)
    down = mask & (D.side == -1)
    n = D.size
    return CoverProfile(
        alpha=_incidence(D.lo[up], D.hi[up], n),
        beta=_incidence(D.lo[down], D.hi[down], n),
        gamma=_covers(D.lo[up], D.hi[up], n),
        xi=_covers(D.lo[down], D.hi[down], n),
    )


def c_plus(m: int) -> int:
    return cover_profile(upsilon(m)).c_plus


def c_minus(m: int) -> int:
    return cover_profile(upsilon(m)).c_minus


def interval_sums(m: int) -> tuple[list[int], list[int]]:
    """Per interval I_1..I_8: (sum of C_+ covers, sum of C_- covers) over E."""
    prof = cover_profile(upsilon(m))
    plus, minus = [], []
    for t in range(1, 9):
        a, b = interval(t, m)
        plus.append(int(prof.gamma[a - 1 : b].sum()))
        minus.append(int(prof.xi[a - 1 : b].sum()))
    return plus, minus


def fiber(t: int, k: int, m: int | None = None) -> tuple[int, int]:
    """Indices at level m+k occupied by Omega^(k)({z_t}); inclusive pair."""
    if m is not None and not 1 <= t <= 1 << (m + 2):
        raise ValueError(f"index {t} outside the level-{m} spine")
    if t < 1 or k < 0:
        raise ValueError("need t >= 1 and k >= 0")
    return (t - 1) * (1 << k) + 1, t * (1 << k)


def lifted_cover_sums(m: int, k: int, i: int, j: int) -> tuple[list[int], list[int]]:
    """Fiber-summed C_+/C_- at level m+k of E[Omega^k(z_i), Omega^k(z_j)], per t."""
    D = upsilon(m + k)
    a0, a1 = fiber(i, k)
    b0, b1 = fiber(j, k)
    mask = (D.lo >= a0) & (D.lo <= a1) & (D.hi >= b0) & (D.hi <= b1)
    prof = cover_profile(D, mask)
    plus, minus = [], []
    for t in range(1, (1 << (m + 2)) + 1):
        f0, f1 = fiber(t, k)
        plus.append(int(prof.gamma[f0 - 1 : f1].sum()))
        minus.append(int(prof.xi[f0 - 1 : f1].sum()))
    return plus, minus


def mirror(D: ArcDiagram) -> set[tuple[int, int]]:
    """Arc set reflected end-to-end: (i, j) -> (size+1-j, size+1-i)."""
    s = D.size + 1
    return {(s - j, s - i) for i, j, _ in D.arcs()}


# ---------------------------------------------------------------- SVG


def to_svg(D: ArcDiagram, labels: Sequence[int] | None = None, spacing: float = 28.0) -> str:
    """Spine on a horizontal axis, each arc a semicircle above (+1) or below (-1)."""
    if labels is None:
        labels = D.spine_labels()
    n = D.size
    span = (D.hi - D.lo).max() if len(D) else 1
    r_max = span * spacing / 2
    width = (n - 1) * spacing + 80
    height = 2 * r_max + 80
    y0 = r_max + 40
    xs = [40 + (i - 1) * spacing for i in range(n + 1)]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
        f'<line x1="{xs[1]:.1f}" y1="{y0:.1f}" x2="{xs[n]:.1f}" y2="{y0:.1f}" stroke="#999" stroke-width="0.5"/>',
    ]
    for i, j, s in D.arcs():
        r = (xs[j] - xs[i]) / 2
        sweep = 1 if s == 1 else 0
        colour = "#1f4e79" if s == 1 else "#7a1f1f"
        out.append(
            f'<path d="M {xs[i]:.1f} {y0:.1f} A {r:.1f} {r:.1f} 0 0 {sweep} {xs[j]:.1f} {y0:.1f}" '
            f'fill="none" stroke="{colour}" stroke-width="0.7"/>'
        )
    for i in range(1, n + 1):
        out.append(f'<circle cx="{xs[i]:.1f}" cy="{y0:.1f}" r="2.5" fill="black"/>')
        out.append(
            f'<text x="{xs[i]:.1f}" y="{y0 - 5:.1f}" font-size="7" text-anchor="middle">{labels[i - 1]}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
