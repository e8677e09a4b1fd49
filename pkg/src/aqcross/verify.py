"""Verification suites: brute-force counts against closed forms.

Each suite returns a list of :class:`Check`; the CLI wraps them in a report.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from aqcross import aqcube, arcdiagram, blacklayout, formulas, partition, seqtables
from aqcross.report import Check, equal

COVER_ROWS_M1 = {
    "alpha": (1, 2, 2, 1),
    "beta": (1, 0, 0, 1),
    "gamma": (0, 1, 3, 5),
    "xi": (0, 1, 1, 1),
}
COVER_ROWS_M3 = {
    "alpha": (3, 4, 3, 2, 3, 4, 5, 4, 4, 5, 4, 3, 2, 3, 4, 3),
    "beta": (3, 2, 3, 4, 3, 2, 1, 2, 2, 1, 2, 3, 4, 3, 2, 3),
    "gamma": (0, 3, 7, 10, 11, 11, 11, 13, 15, 17, 21, 25, 27, 26, 24, 23),
    "xi": (0, 3, 5, 8, 11, 13, 15, 15, 15, 15, 13, 11, 9, 8, 8, 7),
}


def profile_rows(prof: arcdiagram.CoverProfile, count: int) -> dict[str, tuple[int, ...]]:
    """The first ``count`` entries of each row of a cover profile."""
    return {k: tuple(getattr(prof, k)[:count].tolist()) for k in ("alpha", "beta", "gamma", "xi")}


def _mirrored(prof: arcdiagram.CoverProfile) -> bool:
    return all(np.array_equal(getattr(prof, k), getattr(prof, k)[::-1]) for k in ("alpha", "beta", "gamma", "xi"))


# ---------------------------------------------------------------- graph


def graph_suite(nmin: int = 1, nmax: int = 12) -> list[Check]:
    out = []
    for n in range(nmin, nmax + 1):
        cube = aqcube.build(n)
        want_e = 1 if n == 1 else (2 * n - 1) * 2 ** (n - 1)
        out.append(equal(f"AQ_{n} |V|", 2**n, len(cube.vertices())))
        out.append(equal(f"AQ_{n} |E|", want_e, cube.num_edges()))
        out.append(Check(f"AQ_{n} recursive == direct", aqcube.build_recursive(n) == cube.edge_set()))
        if n >= 2:
            out.append(Check(f"AQ_{n} regular of degree 2n-1", all(cube.degree(a) == 2 * n - 1 for a in cube.vertices())))
        dims_ok = all((-n <= d <= -2 or 1 <= d <= n) for _, _, d in cube.edges())
        out.append(Check(f"AQ_{n} edge dims in range", dims_ok))
        inc_ok = all(
            sum(1 for b, d in cube.adj[a] if d == t) == 1 for a in cube.vertices() for t in aqcube.valid_dims(n)
        )
        out.append(Check(f"AQ_{n} one edge per (vertex, dim)", inc_ok))
        if n <= 8:
            sym = all(aqcube.dim(a, b) == aqcube.dim(b, a) for a in range(2**n) for b in range(a, 2**n))
            out.append(Check(f"AQ_{n} dim symmetric", sym))
    A, B = aqcube.find_k44_witness()
    out.append(Check("AQ_3 K_{4,4} witness", aqcube.is_complete_bipartite(A, B), computed=[list(A), list(B)]))
    return out


# ---------------------------------------------------------------- partition


def partition_suite(nmin: int = 5, nmax: int = 9) -> list[Check]:
    out = []
    for n in range(max(nmin, 5), nmax + 1):
        parts = partition.eight_parts(n)
        union = set().union(*(p for _, p in parts.items()))
        sizes_ok = all(len(p) == 2 ** (n - 3) for _, p in parts.items())
        out.append(Check(f"n={n} eight parts partition V", len(union) == 2**n and sizes_ok))
        U = parts.U1 | parts.U2 | parts.U3 | parts.U4
        out.append(Check(f"n={n} U = {{theta_(n-1) = 0}}", U == {a for a in range(2**n) if not aqcube.theta(a, n - 1)}))
        cube = aqcube.build(n)
        tags = [partition.classify_dim(d, n) for _, _, d in cube.edges()]
        out.append(equal(f"n={n} red edges", 2 * 2 ** (n - 1), tags.count("red")))
        out.append(equal(f"n={n} blue edges", 2 * 2 ** (n - 1), tags.count("blue")))
        out.append(equal(f"n={n} black edges", (2 * n - 5) * 2 ** (n - 1), tags.count("black")))
        out += partition.verify_partition(n)
        out += partition.verify_families(n)
    return out


# ---------------------------------------------------------------- upsilon


def upsilon_suite(mmin: int = 0, mmax: int = 8, realize_max: int = 8) -> list[Check]:
    out = []
    for m in range(mmin, mmax + 1):
        D = arcdiagram.upsilon(m)
        L = formulas.arc_forms(m)
        prof = arcdiagram.cover_profile(D)
        out.append(equal(f"m={m} C+", L.c_plus, prof.c_plus))
        out.append(equal(f"m={m} C-", L.c_minus, prof.c_minus))
        if m >= 1:
            out.append(equal(f"m={m} nu(H)", L.nu_h, arcdiagram.crossings(D, "H")))
            plus, minus = arcdiagram.interval_sums(m)
            out.append(equal(f"m={m} interval sums C+", L.interval_plus, plus))
            out.append(equal(f"m={m} interval sums C-", L.interval_minus, minus))
        if m >= 2:
            out.append(equal(f"m={m} nu(H, E_l)", L.nu_h_el, arcdiagram.crossings(D, "H", "E_l")))
        if m >= 3:
            out.append(equal(f"m={m} nu(E)", L.nu_e, arcdiagram.crossings(D)))
        out += structure_checks(m)
        if m <= realize_max:
            out.append(realization_check(m))
    if mmin <= 1 <= mmax:
        prof = arcdiagram.cover_profile(arcdiagram.upsilon(1), "H")
        out.append(equal("m=1 covering table over H, j = 1..4", COVER_ROWS_M1, profile_rows(prof, 4)))
        out.append(Check("m=1 covering rows over H mirror", _mirrored(prof)))
    if mmin <= 3 <= mmax:
        prof = arcdiagram.cover_profile(arcdiagram.upsilon(3), "K")
        out.append(equal("m=3 covering table over K, j = 1..16", COVER_ROWS_M3, profile_rows(prof, 16)))
        out.append(Check("m=3 covering rows over K mirror", _mirrored(prof)))
    for m in range(mmin, min(mmax, 2) + 1):
        for k in range(0, min(3, mmax - m) + 1):
            out.append(lifted_sum_check(m, k))
    small = [arcdiagram.crossings(arcdiagram.upsilon(m)) for m in range(0, 3)]
    out.append(equal("nu(E) for m = 0, 1, 2", [1, 4, 72], small))
    return out


def structure_checks(m: int) -> list[Check]:
    D = arcdiagram.upsilon(m)
    E = D.sides()
    out = []
    nxt = arcdiagram.upsilon(m + 1).sides()
    same = arcdiagram.mirror(D) == set(E)
    lifted = all(nxt.get(k) == -s for k, s in E.items()) and all(k in E for k in nxt if k[1] <= D.size)
    out.append(Check(f"m={m} mirror and lift symmetry", same and lifted))
    dims = set(D.dim.tolist())
    N = D.N
    want = set(range(-(N + m - 2), -(N - 3) + 1)) | set(range(N - 2, N + m - 1))
    out.append(equal(f"m={m} dims present", sorted(want), sorted(dims)))
    top = {(int(i), int(j)) for i, j, d in zip(D.lo, D.hi, D.dim) if d == -(N + m - 2)}
    out.append(Check(f"m={m} top-dim arcs are the pairs (2i-1, 2i)", top == {(2 * i - 1, 2 * i) for i in range(1, D.size // 2 + 1)}))
    if m >= 1:
        H = arcdiagram.subset(D, "H")
        span = D.hi - D.lo
        out.append(Check(f"m={m} no H arc of span 2", not np.any(H & (span == 2))))
        out.append(Check(f"m={m} span-2 arcs start at 1,2 mod 4", bool(np.all(D.lo[span == 2] % 4 != 3) and np.all(D.lo[span == 2] % 4 != 0))))
        prof = arcdiagram.cover_profile(D, "H")
        w = 1 << (m - 1)
        outer = np.zeros(D.size, dtype=bool)
        for t in (1, 4, 5, 8):
            outer[(t - 1) * w : t * w] = True
        ab = bool(np.all(prof.alpha[outer] == 1) and np.all(prof.alpha[~outer] == 2))
        ab &= bool(np.all(prof.beta[outer] == 1) and np.all(prof.beta[~outer] == 0))
        out.append(Check(f"m={m} alpha/beta over H", ab))
        same_parity = int(np.count_nonzero(H & ((D.lo - D.hi) % 2 == 0)))
        out.append(equal(f"m={m} H arcs with i = j mod 2", 2 ** (m + 1), same_parity))
    return out


def realization_check(m: int) -> Check:
    """Arc set and dims of Upsilon_(m) equal the induced subgraph on the lifted spine."""
    D = arcdiagram.upsilon(m)
    z = D.spine_labels()
    index = {a: i for i, a in enumerate(z, start=1)}
    n = D.N + m
    found = {}
    for a in z:
        for t in aqcube.valid_dims(n):
            b = a ^ aqcube.flip_mask(t)
            if b in index and index[a] < index[b]:
                found[(index[a], index[b])] = t
    return Check(f"m={m} arcs == E(<Omega^(m)(z)>) with dims", found == D.dims())


def lifted_sum_check(m: int, k: int) -> Check:
    D = arcdiagram.upsilon(m)
    bad = None
    for i, j, s in D.arcs():
        if not i < j - 2:
            continue
        plus, minus = arcdiagram.lifted_cover_sums(m, k, i, j)
        for t in range(1, D.size + 1):
            wp = formulas.lifted_cover_form(m, k, i, j, t, s, 1)
            wm = formulas.lifted_cover_form(m, k, i, j, t, s, -1)
            if plus[t - 1] != wp or minus[t - 1] != wm:
                bad = f"arc ({i},{j}) t={t}"
                break
        if bad:
            break
    return Check(f"m={m} k={k} fiber sums of lifted arcs", bad is None, detail=bad or "")


# ---------------------------------------------------------------- black layout


def black_suite(nmin: int = 8, nmax: int = 12, layout_check_max: int = 12) -> list[Check]:
    out = []
    for n in range(nmin, nmax + 1):
        L = blacklayout.layout_black(n)
        if n <= layout_check_max:
            problems = blacklayout.check_layout(L)
            out.append(Check(f"n={n} layout matches AQ_n", not problems, detail="; ".join(problems[:3])))
        count = blacklayout.count_black(n, layout=L)
        out.append(equal(f"n={n} black crossings", blacklayout.black_closed_form(n), count.total))
        p1 = count.pairs[1]
        out.append(Check(f"n={n} four pairs equal", all(p == p1 for p in count.pairs.values())))
        out.append(equal(f"n={n} straight/straight per pair", 2 ** (n - 4), p1.straight_straight))
        out.append(equal(f"n={n} straight/straight by index order", 2 ** (n - 4), blacklayout.index_interleavings(L, 1)))
        cm = formulas.c_minus_form(n - 5)
        out.append(equal(f"n={n} straight/arc per column", 2 * cm, p1.straight_arc_u))
        out.append(equal(f"n={n} column crossings", formulas.nu_e_form(n - 5), p1.internal_u))
        if n >= 8:
            other = blacklayout.count_black(n, facing=1, layout=L).total
            out.append(Check(f"n={n} only side -1 facing matches", other != count.total))
    return out


# ---------------------------------------------------------------- sequences


def sequence_suite(nmin: int = 8, nmax: int = 12) -> list[Check]:
    out = []
    if nmin <= 8 <= nmax:
        out.append(equal("t_8 from the drawing", list(seqtables.T8), seqtables.t_geometry(8)))
        out.append(equal("t'_8 first entries", [0, 9], seqtables.t_prime(8)[:2]))
        out.append(equal("sum s_8", 182, sum(seqtables.S8)))
        out.append(Check("s_8 non-increasing", all(a >= b for a, b in zip(seqtables.S8, seqtables.S8[1:]))))
    for n in range(max(nmin, 8), nmax + 1):
        geo = n <= seqtables.GEOMETRY_LIMIT
        if geo:
            t_geo = seqtables.t_geometry(n)
            out.append(equal(f"n={n} t drawing == t table", seqtables.t_recurrence(n), t_geo))
            out.append(equal(f"n={n} t == t' + parity", t_geo, seqtables.t_from_prime(seqtables.t_prime(n))))
            out.append(seqtables.shift_identity(n))
        if n > 8:
            out += seqtables.recurrence_checks(n, "s", seqtables.s_table(n - 1), seqtables.s_table(n), 0)
            prev = seqtables.t_geometry(n - 1) if geo else seqtables.t_recurrence(n - 1)
            cur = seqtables.t_geometry(n) if geo else seqtables.t_recurrence(n)
            out += seqtables.recurrence_checks(n, "t", prev, cur, 2)
        out += seqtables.special_index_identities(n)
        out.append(Check(f"n={n} sequences nonnegative", min(seqtables.s_table(n)) >= 0 and min(seqtables.t_recurrence(n)) >= 0))
        out.append(equal(f"n={n} blue/red inner", 25 * 2 ** (2 * n - 12) + 2 ** (n - 5) - 6, seqtables.blue_red_inner(n)))
        out.append(
            equal(f"n={n} blue/black inner", 403 * 2 ** (2 * n - 15) - 3 * 2 ** (n - 4) - 12 * n + 96, seqtables.blue_black_inner(n))
        )
        out.append(equal(f"n={n} bunch term", 11 * 2 ** (2 * n - 15) - 2 ** (n - 5), seqtables.bunch_term(n)))
        out.append(equal(f"n={n} blue bunch sizes", 2 ** (n - 4), seqtables.blue_routing_plan(n).total))
        if n - 5 <= 10:
            out += interval_term_checks(n)
    return out


def interval_term_checks(n: int) -> list[Check]:
    """Cover-sum terms of the red/black and blue/black components, by brute force."""
    m = n - 5
    plus, minus = arcdiagram.interval_sums(m)
    rb = sum(plus[5:8]) + sum(minus[5:8]) + 2 * minus[4]
    bb = Fraction(arcdiagram.c_minus(m), 2) + sum(plus[0:2]) + sum(minus[2:4])
    return [
        equal(f"n={n} red/black interval term", formulas.red_black_terms(n)["interval_covers"], rb),
        equal(f"n={n} blue/black cover term", formulas.blue_black_terms(n, tables=False)["covers"], bb),
        equal(f"n={n} C+(n-5) term", formulas.c_plus_form(m), arcdiagram.c_plus(m)),
    ]


# ---------------------------------------------------------------- formulas


def formula_suite(nmin: int = 8, nmax: int = 64) -> list[Check]:
    out = []
    for n in range(max(nmin, 8), nmax + 1):
        bd = formulas.breakdown(n)
        out.append(equal(f"n={n} components sum to total", formulas.total_form(n), sum(bd.row()[w] for w in formulas.COMPONENTS)))
        out.append(Check(f"n={n} total < bound", bd.total < bd.bound, bd.bound, bd.total))
        out.append(Check(f"n={n} lower < total", bd.lower < bd.total, bd.total, bd.lower))
        for la, va, rel, vb, ok in formulas.ladder(n):
            out.append(Check(f"n={n} ladder {la} {rel} next", ok, vb, va))
    if nmin <= 8 <= nmax:
        out.append(equal("total(8)", 41992, formulas.total(8)))
        out.append(equal("slack(8)", Fraction(1656), formulas.breakdown(8).slack))
    for m in range(0, 31):
        try:
            formulas.arc_forms(m)
            ok = True
        except ArithmeticError:
            ok = False
        out.append(Check(f"m={m} arc forms integral", ok))
    out.append(equal("first n with positive lower bound", 11, formulas.first_positive_lower_bound(64)))
    cases = {c.n: (c.value, c.kind) for c in formulas.small_cases()}
    out.append(equal("small cases", {1: (0, "exact"), 2: (0, "exact"), 3: (4, "exact"), 4: (46, "upper"), 5: (328, "upper"), 6: (1848, "upper"), 7: (9112, "upper")}, cases))
    return out


SUITES = {
    "graph": graph_suite,
    "partition": partition_suite,
    "upsilon": upsilon_suite,
    "black": black_suite,
    "sequences": sequence_suite,
    "formulas": formula_suite,
}
