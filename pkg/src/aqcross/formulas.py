"""Closed forms for every crossing count, evaluated in exact rationals.

Nothing in this module uses floating point.  Values that must be integers
go through :func:`as_int`, which raises on a leftover denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from math import comb
from typing import Optional

from aqcross import seqtables

COMPONENTS = ("blue", "red", "black", "red_black", "blue_red", "blue_black")

# Largest n for which the inner sums are evaluated from the s/t tables
# (the tables have 2^{n-4}+1 entries).
TABLE_LIMIT = 20


def parity(k: int) -> int:
    """1 + (-1)^k: 2 for even k, 0 for odd k."""
    return 2 if k % 2 == 0 else 0


def as_int(x: F | int, what: str = "value") -> int:
    x = F(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{what} = {x} is not an integer")
    return x.numerator


def bunch_crossings(m: int) -> int:
    """Two bunches of m parallel lines that swap order cross C(m, 2) times."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return comb(m, 2)


# ---------------------------------------------------------------- arc-diagram closed forms


def c_plus_form(m: int) -> int:
    v = F(7, 3) * 4 ** (m + 1) - (2 * m + F(16, 3) + F(7 * parity(m + 1), 6)) * 2**m
    return as_int(v, f"C+({m})")


def c_minus_form(m: int) -> int:
    v = F(5, 3) * 4 ** (m + 1) - (2 * m + F(13, 3) + F(7 * parity(m), 6)) * 2**m
    return as_int(v, f"C-({m})")


def nu_h_form(m: int) -> int:
    """Crossings among the arcs joining the two halves (m >= 1)."""
    if m < 1:
        raise ValueError("m >= 1")
    return 6 * 4 ** (m - 1) - 2 ** (m + 1)


def nu_h_el_form(m: int) -> int:
    """Crossings between the half-joining arcs and the left-half arcs (m >= 2)."""
    if m < 2:
        raise ValueError("m >= 2")
    if m == 2:
        return 24
    if m == 3:
        return 128
    v = F(158, 3) * 4 ** (m - 2) - (8 * m + F(38, 3) + F(7 * parity(m - 1), 3)) * 2 ** (m - 2)
    return as_int(v, f"nu(H,E_l)({m})")


def nu_e_form(m: int) -> int:
    """All crossings of Upsilon_(m) (m >= 3)."""
    if m < 3:
        raise ValueError("m >= 3")
    v = F(194, 3) * 4 ** (m - 1) - (4 * m * m + 23 * m + F(101, 3) - F(7 * parity(m), 6)) * 2 ** (m - 1)
    return as_int(v, f"nu(E)({m})")


def _by_pair(values: tuple[int, int, int, int]) -> list[int]:
    a, b, c, d = values
    return [a, b, c, d, d, c, b, a]


def interval_sum_forms(m: int) -> tuple[list[int], list[int]]:
    """Closed forms for the per-interval C+/C- sums, t = 1..8 (m >= 1)."""
    if m < 1:
        raise ValueError("m >= 1")
    if m == 1:
        return _by_pair((0, 1, 3, 5)), _by_pair((0, 3, 3, 1))
    if m == 2:
        return _by_pair((4, 10, 18, 24)), _by_pair((2, 12, 12, 6))
    q, p = 4 ** (m - 3), 2 ** (m - 3)
    odd, even = F(7 * parity(m + 1), 6), F(7 * parity(m), 6)
    plus = tuple(
        as_int(F(a, 3) * q - (2 * m + F(b, 3) + odd) * p)
        for a, b in ((98, 13), (182, 19), (278, 19), (338, 13))
    )
    minus = tuple(
        as_int(F(a, 3) * q - (2 * m + F(b, 3) + even) * p)
        for a, b in ((94, 16), (202, 10), (202, 10), (142, 16))
    )
    return _by_pair(plus), _by_pair(minus)


def lifted_cover_form(m: int, k: int, i: int, j: int, t: int, side: int, sign: int) -> int:
    """Fiber sum of covers after k lifts of an arc (i, j) with i < j-2.

    ``side`` is the arc's side and ``sign`` the side being counted.
    """
    if side != sign:
        return 0
    if i < t < j:
        return 4**k
    if t in (i, j):
        return (2**k * (2**k - 1)) // 2
    return 0


@dataclass(frozen=True)
class ArcForms:
    m: int
    c_plus: int
    c_minus: int
    nu_h: Optional[int]
    nu_h_el: Optional[int]
    nu_e: Optional[int]
    interval_plus: Optional[list[int]]
    interval_minus: Optional[list[int]]


def arc_forms(m: int) -> ArcForms:
    """Every arc-diagram closed form defined at m (None outside its range)."""
    isum = interval_sum_forms(m) if m >= 1 else (None, None)
    return ArcForms(
        m=m,
        c_plus=c_plus_form(m),
        c_minus=c_minus_form(m),
        nu_h=nu_h_form(m) if m >= 1 else None,
        nu_h_el=nu_h_el_form(m) if m >= 2 else None,
        nu_e=nu_e_form(m) if m >= 3 else None,
        interval_plus=isum[0],
        interval_minus=isum[1],
    )


# ---------------------------------------------------------------- components


def _check_n(n: int) -> None:
    if n < 8:
        raise ValueError("component formulas hold for n >= 8")


def component_form(n: int, which: str) -> int:
    """The final closed form of one component."""
    _check_n(n)
    P = parity(n - 1)
    forms = {
        "blue": lambda: F(11 * 2 ** (2 * n - 13) + 2 ** (n - 3)),
        "red": lambda: F(71 * 2 ** (2 * n - 10) - 5 * 2 ** (n - 4)),
        "black": lambda: F(59 * 2 ** (2 * n - 8) - (4 * n * n - 9 * n - 6) * 2 ** (n - 3) - 7 * P * 2 ** (n - 4)),
        "red_black": lambda: F(389 * 2 ** (2 * n - 11) - (n - 1) * 2**n + 7 * P * 2 ** (n - 5)),
        "blue_red": lambda: F(19 * 2 ** (2 * n - 8) - 3 * 2 ** (n - 3) - 48),
        "blue_black": lambda: F(2737, 3) * 2 ** (2 * n - 12)
        - (8 * n - F(14, 3) + F(7 * parity(n), 6)) * 2 ** (n - 3)
        - 96 * n
        + 768,
    }
    if which not in forms:
        raise ValueError(f"unknown component {which!r}")
    return as_int(forms[which](), f"{which}({n})")


def red_black_terms(n: int) -> dict[str, int]:
    """The four sub-counts whose sum, times 8, is the red/black component."""
    _check_n(n)
    C = bunch_crossings
    a = F(335, 3) * 4 ** (n - 7) - (16 * n - F(100, 3) + F(7 * parity(n - 1), 3)) * 2 ** (n - 8)
    return {
        "interval_covers": as_int(a, "red/black interval term"),
        "bunches": 4 * C(3 * 2 ** (n - 7)) + 4 * C(2 ** (n - 7)) + 2 * C(2 ** (n - 6)) + 6 * 4 ** (n - 6),
        "straight": 4 * 2 ** (n - 5) * 2 ** (n - 6) + 2 * 2 ** (n - 4) * 3 * 2 ** (n - 7),
        "c_plus": c_plus_form(n - 5),
    }


def blue_black_terms(n: int, tables: bool | None = None) -> dict[str, int]:
    _check_n(n)
    if tables is None:
        tables = n <= TABLE_LIMIT
    t79 = F(79, 3) * 2 ** (2 * n - 12) - (4 * n - F(29, 3) + F(7 * parity(n - 1), 6)) * 2 ** (n - 6)
    inner = (
        seqtables.blue_black_inner(n) if tables else 403 * 2 ** (2 * n - 15) - 3 * 2 ** (n - 4) - 12 * n + 96
    )
    return {"c_plus": c_plus_form(n - 5), "covers": as_int(t79, "blue/black cover term"), "inner": inner}


def blue_red_terms(n: int, tables: bool | None = None) -> dict[str, int]:
    _check_n(n)
    if tables is None:
        tables = n <= TABLE_LIMIT
    inner = seqtables.blue_red_inner(n) if tables else 25 * 2 ** (2 * n - 12) + 2 ** (n - 5) - 6
    C = bunch_crossings
    return {"bunches": 2 * C(3 * 2 ** (n - 6)) + 2 * C(2 ** (n - 5)), "inner": inner}


def component_assembled(n: int, which: str, tables: bool | None = None) -> int:
    """A component rebuilt from its sub-terms rather than the final formula."""
    _check_n(n)
    C = bunch_crossings
    if which == "blue":
        return 2 * 2 ** (n - 3) + 8 * (C(2 ** (n - 6)) + C(2 ** (n - 7)) + 2 * C(2 ** (n - 8)))
    if which == "red":
        inner = (C(2 ** (n - 6)) + 3 * 4 ** (n - 6)) + C(2 ** (n - 4)) + (3 * 2 ** (n - 7) * 2 ** (n - 4) + 2 ** (n - 6) * 2 ** (n - 5))
        return 8 * inner + 2 * 4 ** (n - 3)
    if which == "black":
        pair = 2 * nu_e_form(n - 5) + 2 ** (n - 4) + 4 * c_minus_form(n - 5)
        return 4 * pair
    if which == "red_black":
        return 8 * sum(red_black_terms(n).values())
    if which == "blue_red":
        return 8 * sum(blue_red_terms(n, tables).values())
    if which == "blue_black":
        return 8 * sum(blue_black_terms(n, tables).values())
    raise ValueError(f"unknown component {which!r}")


def component(n: int, which: str, tables: bool | None = None) -> int:
    """Exact value of one component; the sub-term assembly must agree."""
    value = component_form(n, which)
    built = component_assembled(n, which, tables)
    if built != value:
        raise AssertionError(f"{which}({n}): assembled {built} != closed form {value}")
    return value


def total_form(n: int) -> int:
    _check_n(n)
    v = (
        F(19367, 3) * 2 ** (2 * n - 13)
        - (8 * n * n + 14 * n - F(71, 3)) * 2 ** (n - 4)
        - F(7 * parity(n - 1), 3) * 2 ** (n - 5)
        - 96 * n
        + 720
    )
    return as_int(v, f"total({n})")


def total(n: int, tables: bool | None = None) -> int:
    """Crossings of the global drawing of AQ_n: component sum == collapsed form."""
    summed = sum(component(n, w, tables) for w in COMPONENTS)
    closed = total_form(n)
    if summed != closed:
        raise AssertionError(f"total({n}): components sum to {summed}, closed form gives {closed}")
    return closed


def upper_bound(n: int) -> F:
    return F(26, 32) * 4**n - (2 * n * n + F(7, 2) * n - 6) * 2 ** (n - 2)


def check_bound(n: int) -> bool:
    return total(n) < upper_bound(n)


def ladder(n: int) -> list[tuple[str, F, str, F, bool]]:
    """Each step of the chain from the exact total to the stated bound.

    Rows are (left label, left value, relation, right value, holds).
    """
    _check_n(n)
    P = parity(n - 1)
    q, p = 2 ** (2 * n - 13), 2 ** (n - 4)
    steps = [
        ("total", F(total_form(n))),
        ("split parity", F(19367, 3) * q - (8 * n * n + 14 * n - F(85, 3)) * p - (F(28, 3) + F(7 * P, 3)) * 2 ** (n - 5) - 96 * n + 720),
        ("drop tail", F(19367, 3) * q - (8 * n * n + 14 * n - F(71, 3)) * p),
        ("round up", F(19368, 3) * q - (8 * n * n + 14 * n - 24) * p),
        ("simplify", F(807 * 4 ** (n - 5) - (4 * n * n + 7 * n - 12) * 2 ** (n - 3))),
        ("bound", upper_bound(n)),
    ]
    relations = ["=", "<", "<", "=", "<"]
    rows = []
    for (la, va), (lb, vb), rel in zip(steps, steps[1:], relations):
        ok = va == vb if rel == "=" else va < vb
        rows.append((la, va, rel, vb, ok))
    return rows


def lower_bound(n: int) -> F:
    """Congestion lower bound 4^n / (5 (1 + 2^{2-n})^2) - (4n^2 + 4n + 17/5) 2^{n-1}."""
    if n < 2:
        raise ValueError("n >= 2")
    return F(4**n) / (5 * (1 + F(4, 2**n)) ** 2) - (4 * n * n + 4 * n + F(17, 5)) * 2 ** (n - 1)


def first_positive_lower_bound(limit: int = 64) -> int | None:
    for n in range(2, limit + 1):
        if lower_bound(n) > 0:
            return n
    return None


@dataclass(frozen=True)
class ComponentBreakdown:
    n: int
    blue: int
    red: int
    black: int
    red_black: int
    blue_red: int
    blue_black: int
    total: int
    bound: F
    lower: F

    @property
    def slack(self) -> F:
        return self.bound - self.total

    def row(self) -> dict[str, F | int]:
        return {
            "n": self.n,
            **{w: getattr(self, w) for w in COMPONENTS},
            "total": self.total,
            "upper_bound": self.bound,
            "slack": self.slack,
            "lower_bound": self.lower,
        }


def breakdown(n: int, tables: bool | None = None) -> ComponentBreakdown:
    values = {w: component(n, w, tables) for w in COMPONENTS}
    tot = sum(values.values())
    if tot != total_form(n):
        raise AssertionError(f"total({n}) mismatch")
    return ComponentBreakdown(n=n, **values, total=tot, bound=upper_bound(n), lower=lower_bound(n))


# ---------------------------------------------------------------- small cases


@dataclass(frozen=True)
class SmallCase:
    n: int
    value: int
    kind: str  # "exact" or "upper"
    note: str


def small_cases() -> list[SmallCase]:
    """Known values and claimed upper bounds of cr(AQ_n) for n <= 7.

    Only n = 3 carries a certificate here: the K_{4,4} witness gives the
    lower bound 4.  The upper bounds for n = 3..7 come from drawings that
    are recorded, not rebuilt.
    """
    return [
        SmallCase(1, 0, "exact", "AQ_1 is a single edge"),
        SmallCase(2, 0, "exact", "AQ_2 is K_4, which is planar"),
        SmallCase(3, 4, "exact", "lower: K_{4,4} subgraph; upper: claimed 4-crossing drawing"),
        SmallCase(4, 46, "upper", "claimed drawing"),
        SmallCase(5, 328, "upper", "claimed drawing"),
        SmallCase(6, 1848, "upper", "claimed drawing"),
        SmallCase(7, 9112, "upper", "claimed drawing"),
    ]
