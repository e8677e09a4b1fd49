from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from aqcross import formulas
from aqcross.formulas import (
    COMPONENTS,
    breakdown,
    bunch_crossings,
    component,
    lower_bound,
    total,
    upper_bound,
)

N8 = {"blue": 120, "red": 4464, "black": 9408, "red_black": 10656, "blue_red": 4720, "blue_black": 12624}


def test_components_n8():
    assert {w: component(8, w) for w in COMPONENTS} == N8
    assert total(8) == 41992
    assert breakdown(8).slack == 1656
    assert upper_bound(8) == 43648


def test_totals():
    assert total(9) == 182352
    assert total(10) == 767440


@pytest.mark.parametrize("n", range(8, 21))
def test_tables_and_closed_forms_agree(n):
    for w in COMPONENTS:
        assert formulas.component_assembled(n, w, tables=True) == formulas.component_assembled(n, w, tables=False)


@given(st.integers(8, 200))
def test_integral_and_bounded(n):
    bd = breakdown(n, tables=False)
    assert isinstance(bd.total, int)
    assert sum(getattr(bd, w) for w in COMPONENTS) == bd.total
    assert lower_bound(n) < bd.total < upper_bound(n)


@given(st.integers(0, 40))
def test_arc_forms_integral(m):
    L = formulas.arc_forms(m)
    assert isinstance(L.c_plus, int) and isinstance(L.c_minus, int)


def test_bunch_crossings():
    assert [bunch_crossings(k) for k in range(0, 5)] == [0, 0, 1, 3, 6]
    assert bunch_crossings(6) == 15


def test_ladder():
    for n in range(8, 65):
        assert all(ok for *_, ok in formulas.ladder(n))


def test_lower_bound():
    assert lower_bound(8) == Fraction(-519510144, 21125)
    assert formulas.first_positive_lower_bound() == 11
    with pytest.raises(ValueError):
        lower_bound(1)


def test_small_n_rejected():
    with pytest.raises(ValueError):
        component(7, "blue")
    with pytest.raises(ValueError):
        formulas.component_form(8, "green")


def test_as_int():
    assert formulas.as_int(Fraction(6, 2)) == 3
    with pytest.raises(ArithmeticError):
        formulas.as_int(Fraction(1, 3))


def test_small_cases():
    cases = {c.n: c for c in formulas.small_cases()}
    assert cases[3].value == 4 and cases[3].kind == "exact"
    assert [cases[n].value for n in range(4, 8)] == [46, 328, 1848, 9112]
    assert all(cases[n].kind == "upper" for n in range(4, 8))
