from fractions import Fraction

import pytest

from aqcross import blacklayout, formulas
from aqcross.blacklayout import black_closed_form, check_layout, count_black, layout_black, spine_positions


def test_spine_positions():
    assert spine_positions(0) == [1, 2, 3, 4]
    assert spine_positions(1) == [1, Fraction(4, 3), Fraction(5, 3), 2, 3, Fraction(10, 3), Fraction(11, 3), 4]
    for m in range(5):
        p = spine_positions(m)
        assert len(p) == 2 ** (m + 2) and p == sorted(p) and len(set(p)) == len(p)


@pytest.mark.parametrize("n", range(5, 11))
def test_layout_realizes_graph(n):
    assert check_layout(layout_black(n)) == []


def test_layout_shape():
    L = layout_black(8)
    assert len(L.columns) == 8
    assert all(len(e) == 2 * 2 ** (8 - 3) for e in L.straight.values())
    with pytest.raises(ValueError):
        layout_black(4)


@pytest.mark.parametrize("n,value", [(8, 9408), (9, 44800), (10, 202752), (11, 867840)])
def test_black_count(n, value):
    c = count_black(n)
    assert c.total == black_closed_form(n) == value == formulas.component_form(n, "black")


@pytest.mark.parametrize("n", range(8, 11))
def test_sub_terms(n):
    L = layout_black(n)
    c = count_black(n, layout=L)
    for p in c.pairs.values():
        assert p.straight_straight == 2 ** (n - 4)
        assert p.straight_arc_u == p.straight_arc_v == 2 * formulas.c_minus_form(n - 5)
        assert p.internal_u == p.internal_v == formulas.nu_e_form(n - 5)
    assert blacklayout.index_interleavings(L, 1) == 2 ** (n - 4)


def test_other_facing_side_disagrees():
    assert count_black(8, facing=1).total != 9408


def test_svg():
    text = blacklayout.to_svg(layout_black(6))
    assert text.count("<line") == 4 * 2 * 2**3
    assert blacklayout.to_svg(layout_black(6)) == text
