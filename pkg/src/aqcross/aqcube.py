"""The augmented cube AQ_n with signed dimension labels.

A vertex is an int whose bit i (1-based, least significant first) is
``theta(a, i)``.  Two vertices are adjacent when they differ in exactly one
bit, or in exactly the bits 1..t for some t >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Union

Label = Union[int, str]


def theta(a: int, i: int) -> int:
    """Bit i of a, 1-based."""
    return (a >> (i - 1)) & 1


def parse_label(s: str) -> int:
    """'00100' -> 4.  The leftmost character is the highest bit."""
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"not a binary label: {s!r}")
    return int(s, 2)


def format_label(a: int, n: int) -> str:
    return format(a, f"0{n}b")


def _coerce(a: Label, b: Label) -> tuple[int, int]:
    if isinstance(a, str) or isinstance(b, str):
        if not (isinstance(a, str) and isinstance(b, str)):
            raise TypeError("mix of string and integer labels")
        if len(a) != len(b):
            raise ValueError(f"label length mismatch: {a!r} vs {b!r}")
        return parse_label(a), parse_label(b)
    return a, b


def dim(a: Label, b: Label) -> int:
    """Signed dimension of the pair ab; 0 when a == b.

    With t the highest differing bit, the result is +t when t == 1 or bit
    t-1 agrees, and -t otherwise.  This is only an edge label when the two
    vertices are actually adjacent (see :func:`adjacent`).
    """
    a, b = _coerce(a, b)
    x = a ^ b
    if x == 0:
        return 0
    t = x.bit_length()
    if t == 1 or theta(a, t - 1) == theta(b, t - 1):
        return t
    return -t


def adjacent(a: Label, b: Label) -> bool:
    a, b = _coerce(a, b)
    x = a ^ b
    if x == 0:
        return False
    if x & (x - 1) == 0:
        return True
    t = x.bit_length()
    return t >= 2 and x == (1 << t) - 1


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"invalid dimension n={n!r}; need n >= 1")


def _check_dim(t: int, n: int) -> None:
    if not (1 <= t <= n or -n <= t <= -2):
        raise ValueError(f"dimension {t} is not valid in AQ_{n}")


def flip_mask(t: int) -> int:
    """XOR mask of the edge with dimension t."""
    return 1 << (t - 1) if t > 0 else (1 << -t) - 1


def incident_edge(a: int, t: int, n: int) -> tuple[int, int]:
    """The unique edge at a with dimension t, as a sorted pair."""
    _check_n(n)
    _check_dim(t, n)
    if not 0 <= a < 1 << n:
        raise ValueError(f"vertex {a} outside AQ_{n}")
    b = a ^ flip_mask(t)
    assert dim(a, b) == t, (a, b, t)
    return (a, b) if a < b else (b, a)


def valid_dims(n: int) -> list[int]:
    """Edge dimensions of AQ_n in increasing order."""
    return list(range(-n, -1)) + list(range(1, n + 1))


@dataclass(frozen=True)
class AugmentedCube:
    """AQ_n as a sorted adjacency table; ``adj[a]`` holds (neighbor, dim) pairs."""

    n: int
    adj: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def order(self) -> int:
        return 1 << self.n

    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, a: int) -> list[int]:
        return [b for b, _ in self.adj[a]]

    def degree(self, a: int) -> int:
        return len(self.adj[a])

    def has_edge(self, a: int, b: int) -> bool:
        return any(c == b for c, _ in self.adj[a])

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (u, v, dim) with u < v, sorted."""
        return [(a, b, d) for a in self.vertices() for b, d in self.adj[a] if a < b]

    def num_edges(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edge_set(self) -> set[tuple[int, int]]:
        return {(u, v) for u, v, _ in self.edges()}


def build(n: int) -> AugmentedCube:
    """Build AQ_n from the direct bit rule."""
    _check_n(n)
    masks = [flip_mask(t) for t in valid_dims(n)]
    rows = []
    for a in range(1 << n):
        row = sorted((a ^ x, dim(a, a ^ x)) for x in masks)
        rows.append(tuple(row))
    return AugmentedCube(n, tuple(rows))


def build_recursive(n: int) -> set[tuple[int, int]]:
    """Edge set of AQ_n from the two-copies definition (test oracle).

    AQ_1 is a single edge.  AQ_n joins a copy with top bit 0 to a copy with
    top bit 1: a is joined to b when the low n-1 bits are equal or are
    complementary.
    """
    _check_n(n)
    edges = {(0, 1)}
    for k in range(2, n + 1):
        top = 1 << (k - 1)
        low = top - 1
        nxt = set(edges)
        nxt |= {(u | top, v | top) for u, v in edges}
        for a in range(top):
            nxt.add((a, a | top))
            nxt.add((a, (a ^ low) | top))
        edges = nxt
    return edges


def edges_between(cube: AugmentedCube, A: Iterable[int], B: Iterable[int]) -> list[tuple[int, int]]:
    """E[A, B]: sorted pairs (u, v), u < v, with one end in A and the other in B.

    When A and B overlap, an edge inside the overlap is listed once.
    """
    A, B = set(A), set(B)
    out = set()
    for a in A:
        for b, _ in cube.adj[a]:
            if b in B:
                out.add((a, b) if a < b else (b, a))
    return sorted(out)


def find_k44_witness() -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exhaustively find a 4/4 split of V(AQ_3) with all 16 cross pairs adjacent.

    The part containing vertex 0 is returned first.
    """
    for part in combinations(range(8), 4):
        if 0 not in part:
            continue
        other = tuple(v for v in range(8) if v not in part)
        if all(adjacent(a, b) for a in part for b in other):
            return part, other
    raise AssertionError("AQ_3 has no K_{4,4} subgraph")  # pragma: no cover


def is_complete_bipartite(A: Iterable[int], B: Iterable[int]) -> bool:
    B = list(B)
    return all(adjacent(a, b) for a in A for b in B)


def format_edge_list(cube: AugmentedCube) -> str:
    """One "u v dim" line per edge, decimal ids, sorted by (u, v)."""
    return "".join(f"{u} {v} {d}\n" for u, v, d in cube.edges())


def write_edge_list(cube: AugmentedCube, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(cube))
