"""The covering sequences s_{n,j}, t_{n,j}, t'_{n,j} and the two inner sums
that count blue edges against red and against black edges.

t and t' are measured on the U1 column of the black layout.  s has no
geometric source here (the red routing is not reconstructed), so the n = 8
row is data and larger n follow from the doubling recurrences.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from aqcross.arcdiagram import upsilon
from aqcross.partition import spine_reversed
from aqcross.report import Check, equal

S8 = (22, 20, 18, 16, 14, 12, 10, 10, 10, 8, 6, 6, 6, 6, 6, 6, 6)
T8 = (0, 10, 16, 22, 24, 30, 32, 34, 32, 38, 40, 42, 40, 42, 40, 38, 32)

# Largest n for which t is also measured on the drawing inside t_table.
GEOMETRY_LIMIT = 15


def _check_n(n: int) -> None:
    if n < 8:
        raise ValueError("the sequences are defined for n >= 8")


@dataclass(frozen=True)
class CoverStats:
    """Per u-index j = 1..2^{n-3} of the U1 column (list index j-1).

    varpi: edges covering u_{1,j}; vartheta / varsigma: edges at u_{1,j}
    leaving upward (toward smaller j) / downward.
    """

    varpi: tuple[int, ...]
    vartheta: tuple[int, ...]
    varsigma: tuple[int, ...]


def cover_stats(n: int, straight: bool = False) -> CoverStats:
    """Covering statistics of E(U1) on the U1 column, in naming order.

    With ``straight`` the dim +-(n-1) edges are added: the horizontal one at
    u_{1,j} is neither up nor down, the diagonal goes up for even j (to
    v_{1,j-1}) and down for odd j.  Neither covers any u_{1,j}.
    """
    if n < 5:
        raise ValueError("needs n >= 5")
    D = upsilon(n - 5)
    size = D.size
    if spine_reversed("U1"):
        a, b = size + 1 - D.hi, size + 1 - D.lo
    else:
        a, b = D.lo, D.hi
    diff = np.zeros(size + 2, dtype=np.int64)
    np.add.at(diff, a + 1, 1)
    np.add.at(diff, b, -1)
    varpi = np.cumsum(diff)[1 : size + 1]
    up = np.bincount(b, minlength=size + 1)[1:].astype(np.int64)
    down = np.bincount(a, minlength=size + 1)[1:].astype(np.int64)
    if straight:
        j = np.arange(1, size + 1)
        up = up + (j % 2 == 0)
        down = down + (j % 2 == 1)
    return CoverStats(tuple(varpi.tolist()), tuple(up.tolist()), tuple(down.tolist()))


def _from_stats(st: CoverStats, n: int) -> list[int]:
    h = 1 << (n - 4)
    seq = [st.varpi[j] + st.vartheta[j] for j in range(h)]
    seq.append(st.varpi[h - 1] + st.varsigma[h - 1])
    return seq


def t_prime(n: int) -> list[int]:
    """t'_{n,1..2^{n-4}+1} measured on E(U1)."""
    _check_n(n)
    return _from_stats(cover_stats(n), n)


def t_geometry(n: int) -> list[int]:
    """t_{n,1..2^{n-4}+1} measured on E(U1) plus the straight edges at U1."""
    _check_n(n)
    return _from_stats(cover_stats(n, straight=True), n)


def t_from_prime(tp: Sequence[int]) -> list[int]:
    """t_j = t'_j, plus one for even j."""
    return [x + (1 if j % 2 == 0 else 0) for j, x in enumerate(tp, start=1)]


def _propagate(base: Sequence[int], n: int, bump: int) -> list[int]:
    """Apply x_{k,2j-1} = 2 x_{k-1,j}, x_{k,2j} = x_{k-1,j} + x_{k-1,j+1} + bump."""
    seq = list(base)
    for _ in range(8, n):
        new = []
        for j in range(len(seq) - 1):
            new += [2 * seq[j], seq[j] + seq[j + 1] + bump]
        new.append(2 * seq[-1])
        seq = new
    return seq


def s_table(n: int) -> list[int]:
    """s_{n,1..2^{n-4}+1} from the n = 8 row by the doubling recurrences."""
    _check_n(n)
    return _propagate(S8, n, 0)


def t_recurrence(n: int) -> list[int]:
    _check_n(n)
    return _propagate(T8, n, 2)


def t_table(n: int, cross_check: bool | None = None) -> list[int]:
    """t from the n = 8 row and recurrences, cross-checked against the drawing.

    The drawing is measured twice: from t' with the parity rule and directly
    with the straight edges included.  Any disagreement raises.
    """
    seq = t_recurrence(n)
    if cross_check is None:
        cross_check = n <= GEOMETRY_LIMIT
    if cross_check:
        via_prime = t_from_prime(t_prime(n))
        direct = t_geometry(n)
        if not seq == via_prime == direct:
            raise AssertionError(f"t_{n}: table, t'+parity and direct geometry disagree")
    return seq


@dataclass(frozen=True)
class SeqTable:
    n: int
    s: tuple[int, ...]
    t: tuple[int, ...]
    t_prime: tuple[int, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "j", "s", "t", "t_prime"])
        for j, row in enumerate(zip(self.s, self.t, self.t_prime), start=1):
            w.writerow([self.n, j, *row])
        return buf.getvalue()


def seq_table(n: int) -> SeqTable:
    t = t_table(n)
    tp = t_prime(n) if n <= GEOMETRY_LIMIT else [x - (1 if j % 2 == 0 else 0) for j, x in enumerate(t, start=1)]
    return SeqTable(n, tuple(s_table(n)), tuple(t), tuple(tp))


# ---------------------------------------------------------------- identities


def shift_identity(n: int) -> Check:
    """t_{n,j+1} = varpi_j + varsigma_j (straight edges included), j < 2^{n-4}."""
    st = cover_stats(n, straight=True)
    t = t_geometry(n)
    h = 1 << (n - 4)
    bad = [j for j in range(1, h) if t[j] != st.varpi[j - 1] + st.varsigma[j - 1]]
    return Check(f"n={n} t_(j+1) = varpi_j + varsigma_j", not bad, detail=f"fails at j={bad[0]}" if bad else "")


def recurrence_checks(n: int, name: str, prev: Sequence[int], cur: Sequence[int], bump: int) -> list[Check]:
    odd = all(cur[2 * j - 2] == 2 * prev[j - 1] for j in range(1, len(prev) + 1))
    even = all(cur[2 * j - 1] == prev[j - 1] + prev[j] + bump for j in range(1, len(prev)))
    return [
        Check(f"n={n} {name}_(2j-1) = 2 {name}_(n-1,j)", odd),
        Check(f"n={n} {name}_(2j) = {name}_(n-1,j) + {name}_(n-1,j+1)" + (f" + {bump}" if bump else ""), even),
    ]


def special_index_identities(n: int) -> list[Check]:
    """Closed values of s and t at the indices j*2^{n-7}, j*2^{n-7}+1, j*2^{n-7}+2."""
    _check_n(n)
    s, t = s_table(n), t_recurrence(n)
    k = 1 << (n - 7)
    c = (1 << (n - 8)) - 1
    S = lambda j: S8[j - 1]  # noqa: E731
    T = lambda j: T8[j - 1]  # noqa: E731
    sv = lambda i: s[i - 1]  # noqa: E731
    tv = lambda i: t[i - 1]  # noqa: E731
    out = []

    def add(label, pairs):
        bad = [(j, want, got) for j, want, got in pairs if want != got]
        out.append(Check(f"n={n} {label}", not bad, detail=f"j={bad[0][0]}: want {bad[0][1]}, got {bad[0][2]}" if bad else ""))

    add("s at j*2^(n-7)+1", [(j, (c + 1) * S(2 * j + 1), sv(j * k + 1)) for j in range(0, 9)])
    add("s at j*2^(n-7)", [(j, S(2 * j) + c * S(2 * j + 1), sv(j * k)) for j in range(1, 9)])
    add("s at j*2^(n-7)+2", [(j, c * S(2 * j + 1) + S(2 * j + 2), sv(j * k + 2)) for j in range(1, 8)])
    add("t at j*2^(n-7)+1", [(j, (c + 1) * T(2 * j + 1), tv(j * k + 1)) for j in range(0, 9)])
    add("t at j*2^(n-7)", [(j, T(2 * j) + c * T(2 * j + 1) + 2 * (n - 8), tv(j * k)) for j in range(1, 9)])
    add("t at j*2^(n-7)+2", [(j, c * T(2 * j + 1) + T(2 * j + 2) + 2 * (n - 8), tv(j * k + 2)) for j in range(1, 8)])
    out.append(
        equal(f"n={n} sum s", 4 ** (n - 8) * sum(S8) - 7 * 2 ** (2 * n - 15) + 7 * 2 ** (n - 7), sum(s))
    )
    out.append(equal(f"n={n} sum t", 4 ** (n - 8) * sum(T8), sum(t)))
    return out


# ---------------------------------------------------------------- inner sums


@dataclass(frozen=True)
class BlueRoutingPlan:
    """Where the 2^{n-4} dim-n edges from V_{1,1} meet the U1 column.

    ``bunches`` maps a u-index to the number of edges routed along it.
    ``above`` holds the j for which the dim -n edge at v_{1,j} runs above
    the line through u_{1,j}; the others run below.
    """

    n: int
    bunches: dict[int, int]
    above: frozenset[int]

    @property
    def total(self) -> int:
        return sum(self.bunches.values())


def blue_routing_plan(n: int) -> BlueRoutingPlan:
    _check_n(n)
    p = lambda e: 1 << (n - e)  # noqa: E731  2^{n-e}
    bunches: dict[int, int] = {}
    for index, mult in (
        (1, p(5)),
        (p(5) + 1, p(7)),
        (p(5) + p(7) + 1, p(8)),
        (p(5) + p(6) + 1, p(8)),
        (p(4) + 1, p(6)),
    ):
        bunches[index] = bunches.get(index, 0) + mult
    ranges = [
        (1, p(6) - 1),
        (p(6) + 1, p(6) + p(7) - 1),
        (p(6) + p(7) + 1, p(5) - 1),
        (p(5) + 1, p(5) + p(7) - 1),
        (p(5) + p(7) + 1, p(5) + p(6) - 1),
        (p(5) + p(6) + 1, p(5) + p(6) + 1),
    ]
    above = frozenset(j for a, b in ranges for j in range(a, b + 1))
    return BlueRoutingPlan(n, bunches, above)


def _collapsed(x: Sequence[int], n: int) -> int:
    """The inner-sum expression in its collapsed form (x is 1-based via x[j-1])."""
    k = 1 << (n - 7)
    v = lambda i: x[i - 1]  # noqa: E731
    first = sum(x) + sum(v(j * k + 1) for j in range(2, 7)) - sum(v(j * k) for j in range(2, 7)) - v(6 * k + 2)
    second = (
        (1 << (n - 5)) * v(1)
        + (1 << (n - 7)) * v(4 * k + 1)
        + (1 << (n - 8)) * v(5 * k + 1)
        + (1 << (n - 8)) * v(6 * k + 1)
        + (1 << (n - 6)) * v(8 * k + 1)
    )
    return first + second


def _expanded(x: Sequence[int], n: int, plan: BlueRoutingPlan, mult_seq: Sequence[int] | None = None) -> int:
    """Edge-by-edge form: one term per dim -n edge, then one per bunch."""
    h = 1 << (n - 4)
    p = lambda e: 1 << (n - e)  # noqa: E731
    v = lambda i: x[i - 1]  # noqa: E731
    steps = [p(6), p(6) + p(7), p(5), p(5) + p(7), p(5) + p(6)]
    total = sum(x[:h]) + sum(v(i + 1) - v(i) for i in steps)
    total += sum(v(j + 1) - v(j) for j in range(p(5) + p(6) + 2, h + 1))
    m = mult_seq if mult_seq is not None else x
    total += sum(mult * m[index - 1] for index, mult in plan.bunches.items())
    return total


def bunch_term(n: int) -> int:
    """Crossings inside the dim-n bunches: 2C(2^{n-7},2) + 4C(2^{n-8},2) + 2C(2^{n-6},2)."""
    return 2 * comb(1 << (n - 7), 2) + 4 * comb(1 << (n - 8), 2) + 2 * comb(1 << (n - 6), 2)


def blue_red_inner(n: int) -> int:
    """Crossings between the dim +-n edges at V_{1,1} and the red edges at U_{1,1}."""
    _check_n(n)
    s = s_table(n)
    value = _collapsed(s, n)
    if value != _expanded(s, n, blue_routing_plan(n)):
        raise AssertionError(f"n={n}: expanded and collapsed blue/red sums differ")
    closed = 25 * 2 ** (2 * n - 12) + 2 ** (n - 5) - 6
    if value != closed:
        raise AssertionError(f"n={n}: blue/red inner sum {value} != {closed}")
    return value


def blue_black_inner(n: int) -> int:
    """Crossings between the dim +-n edges at V_{1,1} and E(U1) u E[U1,V1]."""
    _check_n(n)
    t = t_table(n)
    tp = [x - (1 if j % 2 == 0 else 0) for j, x in enumerate(t, start=1)]
    value = _collapsed(t, n) + bunch_term(n)
    if value != _expanded(t, n, blue_routing_plan(n), mult_seq=tp) + bunch_term(n):
        raise AssertionError(f"n={n}: expanded and collapsed blue/black sums differ")
    closed = 403 * 2 ** (2 * n - 15) - 3 * 2 ** (n - 4) - 12 * n + 96
    if value != closed:
        raise AssertionError(f"n={n}: blue/black inner sum {value} != {closed}")
    return value
