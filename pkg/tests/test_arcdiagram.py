import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aqcross import arcdiagram, formulas
from aqcross.arcdiagram import (
    count_crossings,
    cover_profile,
    crossings,
    crossings_naive,
    fiber,
    interval,
    subset,
    upsilon,
)


def test_base_diagram():
    D = upsilon(0)
    assert D.size == 4 and len(D) == 6
    assert D.sides() == {(1, 2): -1, (3, 4): -1, (1, 3): 1, (2, 4): 1, (1, 4): 1, (2, 3): 1}
    assert D.dims()[(1, 2)] == -3 and D.dims()[(1, 4)] == 3 and D.dims()[(1, 3)] == -2
    assert crossings(D) == 1


@pytest.mark.parametrize("m", range(0, 7))
def test_arc_count_and_size(m):
    D = upsilon(m)
    assert D.size == 2 ** (m + 2)
    # induced subgraph of a (2N-1)-regular graph: count it through the labels
    assert len(D) == len(set(D.arcs()))
    assert np.all(D.lo < D.hi)


def test_upsilon_one_structure():
    D = upsilon(1)
    assert D.size == 8
    assert {s for *_, s in D.arcs()} == {-1, 1}


@pytest.mark.parametrize("m", range(0, 6))
def test_fast_matches_naive(m):
    D = upsilon(m)
    arcs = list(zip(D.lo.tolist(), D.hi.tolist(), D.side.tolist()))
    assert crossings(D) == crossings_naive(arcs)


arc_lists = st.lists(
    st.tuples(st.integers(1, 30), st.integers(1, 30), st.sampled_from([-1, 1]))
    .filter(lambda a: a[0] != a[1])
    .map(lambda a: (min(a[0], a[1]), max(a[0], a[1]), a[2])),
    max_size=40,
    unique_by=lambda a: (a[0], a[1]),
)


@settings(max_examples=200)
@given(arc_lists, arc_lists)
def test_count_crossings_random(a, b):
    def arr(xs, k):
        return np.array([x[k] for x in xs], dtype=np.int64)

    assert count_crossings(arr(a, 0), arr(a, 1), arr(a, 2)) == crossings_naive(a)
    b = [x for x in b if (x[0], x[1]) not in {(y[0], y[1]) for y in a}]
    got = count_crossings(arr(a, 0), arr(a, 1), arr(a, 2), arr(b, 0), arr(b, 1), arr(b, 2))
    assert got == crossings_naive(a, b)


def test_subsets():
    D = upsilon(2)
    E = subset(D, "E")
    assert E.all()
    H, K = subset(D, "H"), subset(D, "K")
    assert np.all(K[H])  # arcs crossing the middle are never interval-internal
    inner = np.zeros(len(D), dtype=bool)
    for t in range(1, 9):
        inner |= subset(D, f"E_{t}")
    assert np.array_equal(K, ~inner)
    El, Er = subset(D, "E_l"), subset(D, "E_r")
    assert not np.any(El & Er)
    assert subset(D, [0, 1]).sum() == 2
    with pytest.raises(ValueError):
        subset(D, "nope")


def test_overlapping_subsets_rejected():
    with pytest.raises(ValueError):
        crossings(upsilon(2), "H", "E")


def test_intervals():
    assert interval(1, 1) == (1, 1)
    assert interval(8, 3) == (29, 32)
    with pytest.raises(ValueError):
        interval(9, 2)


def test_fiber_examples():
    assert fiber(3, 2) == (9, 12)
    assert fiber(1, 0) == (1, 1)
    with pytest.raises(ValueError):
        fiber(0, 1)
    with pytest.raises(ValueError):
        fiber(5, 1, m=0)


@pytest.mark.parametrize("m", range(0, 9))
def test_closed_forms(m):
    D = upsilon(m)
    L = formulas.arc_forms(m)
    prof = cover_profile(D)
    assert (prof.c_plus, prof.c_minus) == (L.c_plus, L.c_minus)
    if m >= 1:
        assert crossings(D, "H") == L.nu_h == 6 * 4 ** (m - 1) - 2 ** (m + 1)
        assert arcdiagram.interval_sums(m) == (L.interval_plus, L.interval_minus)
    if m >= 2:
        assert crossings(D, "H", "E_l") == L.nu_h_el
    if m >= 3:
        assert crossings(D) == L.nu_e


def test_named_values():
    assert crossings(upsilon(1), "H") == 2
    assert crossings(upsilon(2), "H", "E_l") == 24
    assert crossings(upsilon(3), "H", "E_l") == 128
    assert crossings(upsilon(3)) == 480
    assert formulas.arc_forms(4).nu_h_el == 664


def test_mirror_and_lift():
    for m in range(0, 6):
        D, up = upsilon(m), upsilon(m + 1).sides()
        assert arcdiagram.mirror(D) == set(D.sides())
        assert all(up[k] == -s for k, s in D.sides().items())


def test_svg():
    text = arcdiagram.to_svg(upsilon(1))
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
    assert text.count("<circle") == 8
    assert text.count("<path") == len(upsilon(1))
    assert arcdiagram.to_svg(upsilon(1)) == text
