"""The U/V split, the lifting maps pi, hat and Omega, the eight vertex
classes, edge colours, and the u_{i,j} / v_{i,j} naming of the columns.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Literal

from aqcross.aqcube import adjacent, build, dim, parse_label, theta
from aqcross.report import Check

PART_NAMES = ("U1", "U2", "U3", "U4", "V1", "V2", "V3", "V4")

# The eight classes of V(AQ_5), listed as given.
BASE_PARTS: dict[str, tuple[int, ...]] = {
    name: tuple(parse_label(s) for s in labels.split())
    for name, labels in {
        "U1": "00100 00011 00111 00000",
        "U2": "00101 00010 00110 00001",
        "U3": "10100 10011 10111 10000",
        "U4": "10101 10010 10110 10001",
        "V1": "01011 01100 01000 01111",
        "V2": "01010 01101 01001 01110",
        "V3": "11011 11100 11000 11111",
        "V4": "11010 11101 11001 11110",
    }.items()
}

# Seed quadruple (z_1, z_2, z_3, z_4) of each column's arc diagram in AQ_5.
# Each satisfies E({z}) = {z1z2, z3z4, z1z4, z2z3, z1z3, z2z4} with
# dim(z1z2) = dim(z3z4) = -3, dim(z1z4) = dim(z2z3) = 3, dim(z1z3) = dim(z2z4) = -2.
SPINE_SEEDS: dict[str, tuple[int, ...]] = {
    name: tuple(parse_label(s) for s in labels.split())
    for name, labels in {
        "U1": "00100 00011 00111 00000",
        "U2": "00001 00110 00010 00101",
        "U3": "10100 10011 10111 10000",
        "U4": "10101 10010 10110 10001",
        "V1": "01111 01000 01100 01011",
        "V2": "01010 01101 01001 01110",
        "V3": "11111 11000 11100 11011",
        "V4": "11110 11001 11101 11010",
    }.items()
}

# Column x-positions.
X_POSITION = {"U1": -2, "U3": -2, "V1": -1, "V3": -1, "V2": 1, "V4": 1, "U2": 2, "U4": 2}

# Y anchors of the seed quadruple (z_1..z_4) in each column.  The two columns
# with negative Y mirror their partners across the x-axis: U3 mirrors U1 and
# V3 mirrors V1 index-for-index.  This is the assignment under which every
# dimension-family identity holds (see verify_families / search_orientations).
Y_ANCHORS = {
    "U1": (1, 2, 3, 4),
    "V2": (1, 2, 3, 4),
    "V1": (4, 3, 2, 1),
    "U2": (4, 3, 2, 1),
    "V3": (-4, -3, -2, -1),
    "V4": (-4, -3, -2, -1),
    "U3": (-1, -2, -3, -4),
    "U4": (-1, -2, -3, -4),
}

EdgeClass = Literal["black", "red", "blue"]


def pi(a: int, n: int) -> int:
    """Embed a vertex of AQ_n into AQ_{n+1}.

    Bits 1..n-1 are kept, bit n becomes theta_{n-1}(a) and bit n+1 becomes
    theta_n(a).
    """
    if n < 2:
        raise ValueError("pi needs n >= 2")
    low = a & ((1 << (n - 1)) - 1)
    return low | (theta(a, n - 1) << (n - 1)) | (theta(a, n) << n)


def hat(a: int, m: int) -> int:
    """Flip bits 1..m-2 of a vertex of AQ_m; dim(a, hat(a)) = -(m-2)."""
    if m < 4:
        raise ValueError("hat needs m >= 4")
    return a ^ ((1 << (m - 2)) - 1)


def omega_pair(a: int, n: int) -> tuple[int, int]:
    """(pi(a), hat(pi(a))) in AQ_{n+1}; hat uses the target dimension n+1."""
    p = pi(a, n)
    return p, hat(p, n + 1)


def omega(A: Iterable[int], n: int) -> set[int]:
    out: set[int] = set()
    for a in A:
        out.update(omega_pair(a, n))
    return out


def omega_m(A: Iterable[int], n: int, m: int) -> set[int]:
    """Omega applied m times, starting in AQ_n."""
    out = set(A)
    for k in range(m):
        out = omega(out, n + k)
    return out


def lift_spine(seed: Iterable[int], n0: int, m: int) -> list[int]:
    """Labels z_1..z_{4*2^m} of the spine after m lifts of a seed in AQ_{n0}.

    pi(z_i) lands at index 2i-1 for odd i and 2i for even i; hat(pi(z_i))
    takes the other slot of the pair.
    """
    z = list(seed)
    n = n0
    for _ in range(m):
        nz = [0] * (2 * len(z))
        for i0, a in enumerate(z):
            p, h = omega_pair(a, n)
            if i0 % 2 == 0:  # i odd
                nz[2 * i0], nz[2 * i0 + 1] = p, h
            else:
                nz[2 * i0 + 1], nz[2 * i0] = p, h
        z = nz
        n += 1
    return z


@dataclass(frozen=True)
class EightParts:
    n: int
    U1: frozenset[int]
    U2: frozenset[int]
    U3: frozenset[int]
    U4: frozenset[int]
    V1: frozenset[int]
    V2: frozenset[int]
    V3: frozenset[int]
    V4: frozenset[int]

    def __getitem__(self, name: str) -> frozenset[int]:
        if name not in PART_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    def items(self) -> Iterator[tuple[str, frozenset[int]]]:
        for name in PART_NAMES:
            yield name, self[name]

    def part_of(self) -> dict[int, str]:
        return {a: name for name, part in self.items() for a in part}

    def to_json(self) -> str:
        return json.dumps({"n": self.n, **{k: sorted(v) for k, v in self.items()}}, indent=2)


def eight_parts(n: int) -> EightParts:
    if n < 5:
        raise ValueError("the eight classes are defined for n >= 5")
    parts = {k: frozenset(v) for k, v in BASE_PARTS.items()}
    for k in range(5, n):
        parts = {name: frozenset(omega(p, k)) for name, p in parts.items()}
    return EightParts(n, **parts)


def classify_dim(d: int, n: int) -> EdgeClass:
    if d in (1, 2):
        return "red"
    if d in (n, -n):
        return "blue"
    if -(n - 1) <= d <= -2 or 3 <= d <= n - 1:
        return "black"
    raise ValueError(f"{d} is not an edge dimension of AQ_{n}")


def classify_edge(e: tuple[int, int], n: int) -> EdgeClass:
    u, v = e
    if not adjacent(u, v):
        raise ValueError(f"{u} and {v} are not adjacent")
    return classify_dim(dim(u, v), n)


def _first_bad(pairs, pred):
    for p in pairs:
        if not pred(p):
            return p
    return None


def verify_partition(n: int) -> list[Check]:
    """Check the edge partition of AQ_n and how edges lift into AQ_{n+1}."""
    if n < 5:
        raise ValueError("needs n >= 5")
    cube = build(n)
    edges = cube.edges()
    parts = eight_parts(n)
    where = parts.part_of()
    U = parts.U1 | parts.U2 | parts.U3 | parts.U4
    checks: list[Check] = []

    def add(name, bad):
        checks.append(Check(f"n={n} {name}", bad is None, detail="" if bad is None else f"counterexample {bad}"))

    # Conclusion 4: class pairs versus dimensions.
    groups = {
        "dims {1,2}": ({1, 2}, [("U1", "U2"), ("U3", "U4"), ("V1", "V2"), ("V3", "V4")]),
        "dim n": ({n}, [("U1", "U3"), ("U2", "U4"), ("V1", "V3"), ("V2", "V4")]),
        "dim -n": ({-n}, [("U1", "V3"), ("U2", "V4"), ("V1", "U3"), ("V2", "U4")]),
        "internal dims": (
            set(range(-(n - 2), -1)) | set(range(3, n - 1)),
            [(p, p) for p in PART_NAMES],
        ),
        "dims +-(n-1)": ({n - 1, -(n - 1)}, [(f"U{i}", f"V{i}") for i in range(1, 5)]),
    }
    for label, (dims, pairs) in groups.items():
        allowed = {frozenset(p) for p in pairs}
        bad = _first_bad(
            edges,
            lambda e: (e[2] in dims) == (frozenset((where[e[0]], where[e[1]])) in allowed),
        )
        add(f"partition row [{label}]", bad)

    # Conclusions 1 and 2, first halves.
    across = {-n, -(n - 1), n - 1}
    add("E[U,V] dims", _first_bad(edges, lambda e: ((e[0] in U) != (e[1] in U)) == (e[2] in across)))

    # Lifted edge sets.
    def lifted(u, v):
        pu, hu = omega_pair(u, n)
        pv, hv = omega_pair(v, n)
        out = {}
        for tag, a, b in (("pp", pu, pv), ("hh", hu, hv), ("ph", pu, hv), ("hp", hu, pv)):
            if adjacent(a, b):
                out[tag] = dim(a, b)
        return out

    def lift_ok(e):
        u, v, d = e
        got = lifted(u, v)
        if d == -(n - 1):
            want = {"pp": d - 1, "hh": d - 1, "ph": n, "hp": n}
        elif d == -n:
            want = {"pp": d - 1, "hh": d - 1}
        elif d == n - 1:
            want = {}
        elif d == -(n - 2):
            want = {"pp": d, "hh": d, "ph": n - 1, "hp": n - 1}
        elif d == n:
            want = {"pp": n + 1, "hh": n + 1}
        else:
            want = {"pp": d, "hh": d}
        return got == want

    add("lifted edges of adjacent pairs", _first_bad(edges, lift_ok))

    # Conclusion 3 and disjointness: every vertex of AQ_{n+1} has exactly one
    # preimage, and an edge of AQ_{n+1} only joins images of equal or adjacent
    # vertices of AQ_n.
    pre: dict[int, int] = {}
    clash = None
    for a in range(1 << n):
        for w in omega_pair(a, n):
            if w in pre and clash is None:
                clash = (pre[w], a)
            pre[w] = a
    if clash is None and len(pre) != 1 << (n + 1):
        clash = "images do not cover V(AQ_{n+1})"
    add("Omega({a}) pairwise disjoint", clash)
    big = build(n + 1)
    add(
        "non-adjacent pairs lift to no edges",
        _first_bad(
            big.edges(),
            lambda e: pre[e[0]] == pre[e[1]] or adjacent(pre[e[0]], pre[e[1]]),
        ),
    )
    return checks


@dataclass(frozen=True)
class CanonicalNames:
    """u[(i, j)] and v[(i, j)] for i in 1..4, j in 1..2^{n-3}."""

    n: int
    u: dict[tuple[int, int], int]
    v: dict[tuple[int, int], int]

    @property
    def size(self) -> int:
        return 1 << (self.n - 3)

    def family(self, letter: str) -> dict[tuple[int, int], int]:
        return self.u if letter == "u" else self.v

    def column(self, part: str) -> list[int]:
        """The part's vertices in naming order, index j-1 holding j."""
        fam = self.family(part[0].lower())
        i = int(part[1])
        return [fam[(i, j)] for j in range(1, self.size + 1)]

    def half(self, part: str, which: int) -> list[int]:
        """Subfamily U_{i,1} (j <= 2^{n-4}) or U_{i,2} (the rest)."""
        col = self.column(part)
        h = self.size // 2
        return col[:h] if which == 1 else col[h:]

    def to_json(self) -> str:
        data = {"n": self.n}
        for letter in "uv":
            fam = self.family(letter)
            data[letter] = {str(i): [fam[(i, j)] for j in range(1, self.size + 1)] for i in range(1, 5)}
        return json.dumps(data, indent=2)


def spine_reversed(part: str) -> bool:
    """True when |Y| grows along the spine, so u_{i,j} = spine[2^{n-3}+1-j]."""
    ys = [abs(y) for y in Y_ANCHORS[part]]
    return ys == sorted(ys)


def spines(n: int) -> dict[str, list[int]]:
    return {name: lift_spine(seed, 5, n - 5) for name, seed in SPINE_SEEDS.items()}


def _names_from(n: int, reversed_parts: dict[str, bool]) -> CanonicalNames:
    u: dict[tuple[int, int], int] = {}
    v: dict[tuple[int, int], int] = {}
    for name, z in spines(n).items():
        fam = u if name[0] == "U" else v
        i = int(name[1])
        order = z[::-1] if reversed_parts[name] else z
        for j, a in enumerate(order, start=1):
            fam[(i, j)] = a
    return CanonicalNames(n, u, v)


def verify_families(n: int, names: CanonicalNames | None = None) -> list[Check]:
    """The seven dimension-family identities of the naming.

    A pair only counts if it is an edge, so each identity checks adjacency
    as well as the dimension.
    """
    if names is None:
        names = _names_from(n, {p: spine_reversed(p) for p in PART_NAMES})
    u, v = names.u, names.v
    N = names.size
    h = N // 2
    J = range(1, N + 1)

    def D(a, b):
        return dim(a, b) if adjacent(a, b) else None

    def res(x):
        return (x - 1) % N + 1

    fams = {
        "dim -(n-1): u_ij v_ij": [((u, i, j), (v, i, j), -(n - 1)) for i in range(1, 5) for j in J],
        "dim n-1: u_ij v_i,j+(-1)^(j-1)": [
            ((u, i, j), (v, i, j + (1 if j % 2 else -1)), n - 1) for i in range(1, 5) for j in J
        ],
        "dim -(n-2): w_i,2j-1 w_i,2j": [
            ((w, i, 2 * j - 1), (w, i, 2 * j), -(n - 2)) for w in (u, v) for i in range(1, 5) for j in range(1, h + 1)
        ],
        "dim 1: w_1j w_2j, w_3j w_4j": [
            ((w, a, j), (w, b, j), 1) for w in (u, v) for a, b in ((1, 2), (3, 4)) for j in J
        ],
        "dim 2: w_1j w_2,j+2^(n-4)": [
            ((w, a, j), (w, b, res(j + h)), 2) for w in (u, v) for a, b in ((1, 2), (3, 4)) for j in J
        ],
        "dim -n: u1v3, v1u3, u2v4, v2u4": [
            ((x, a, j), (y, b, j), -n)
            for x, a, y, b in ((u, 1, v, 3), (v, 1, u, 3), (u, 2, v, 4), (v, 2, u, 4))
            for j in J
        ],
        "dim n: w1w3, w2w4": [((w, a, j), (w, b, j), n) for w in (u, v) for a, b in ((1, 3), (2, 4)) for j in J],
    }
    checks = []
    for label, triples in fams.items():
        bad = None
        for (f1, i1, j1), (f2, i2, j2), want in triples:
            got = D(f1[(i1, j1)], f2[(i2, j2)])
            if got != want:
                bad = f"({i1},{j1})-({i2},{j2}) dim {got}, want {want}"
                break
        checks.append(Check(f"n={n} {label}", bad is None, detail=bad or ""))
    return checks


def search_orientations(n: int) -> list[dict[str, bool]]:
    """Every per-column spine direction making all family identities hold."""
    found = []
    for bits in product((False, True), repeat=8):
        rev = dict(zip(PART_NAMES, bits))
        if all(c.passed for c in verify_families(n, _names_from(n, rev))):
            found.append(rev)
    return found


def canonical_names(n: int) -> CanonicalNames:
    """Name each column so that |Y| decreases with j, then check the families."""
    if n < 5:
        raise ValueError("needs n >= 5")
    names = _names_from(n, {p: spine_reversed(p) for p in PART_NAMES})
    bad = [c for c in verify_families(n, names) if not c.passed]
    if bad:
        raise AssertionError(f"naming violates {bad[0].name}: {bad[0].detail}")
    return names
