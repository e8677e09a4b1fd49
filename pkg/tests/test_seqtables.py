import pytest

from aqcross import seqtables
from aqcross.seqtables import (
    S8,
    T8,
    blue_black_inner,
    blue_red_inner,
    s_table,
    seq_table,
    t_geometry,
    t_recurrence,
    t_table,
)


def test_n8_rows():
    assert t_geometry(8) == list(T8)
    assert sum(S8) == 182
    assert len(S8) == len(T8) == 2**4 + 1


def test_examples_n9():
    s, t = s_table(9), t_recurrence(9)
    assert (s[0], s[1]) == (44, 42)
    assert (t[1], t[2]) == (12, 20)


@pytest.mark.parametrize("n", range(8, 14))
def test_geometry_matches_recurrence(n):
    assert t_geometry(n) == t_recurrence(n) == t_table(n, cross_check=True)
    assert seqtables.t_from_prime(seqtables.t_prime(n)) == t_geometry(n)


@pytest.mark.parametrize("n", range(9, 14))
def test_recurrences(n):
    for name, prev, cur, bump in (("s", s_table(n - 1), s_table(n), 0), ("t", t_geometry(n - 1), t_geometry(n), 2)):
        assert all(c.passed for c in seqtables.recurrence_checks(n, name, prev, cur, bump))


@pytest.mark.parametrize("n", range(8, 14))
def test_identities(n):
    assert seqtables.shift_identity(n).passed
    assert all(c.passed for c in seqtables.special_index_identities(n))
    assert sum(s_table(n)) == 4 ** (n - 8) * 182 - 7 * 2 ** (2 * n - 15) + 7 * 2 ** (n - 7)


@pytest.mark.parametrize("n", range(8, 15))
def test_inner_sums(n):
    assert blue_red_inner(n) == 25 * 2 ** (2 * n - 12) + 2 ** (n - 5) - 6
    assert blue_black_inner(n) == 403 * 2 ** (2 * n - 15) - 3 * 2 ** (n - 4) - 12 * n + 96


def test_inner_examples():
    assert (blue_red_inner(8), blue_black_inner(8)) == (402, 758)
    assert (blue_red_inner(9), blue_black_inner(9)) == (1610, 3116)


def test_routing_plan():
    for n in range(8, 13):
        assert seqtables.blue_routing_plan(n).total == 2 ** (n - 4)


def test_csv():
    text = seq_table(8).to_csv()
    lines = text.splitlines()
    assert lines[0] == "n,j,s,t,t_prime"
    assert len(lines) == 1 + 17
    assert lines[1].startswith("8,1,")


def test_rejects_small_n():
    with pytest.raises(ValueError):
        s_table(7)
    with pytest.raises(ValueError):
        t_geometry(7)
