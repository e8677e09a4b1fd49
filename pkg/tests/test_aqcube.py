import pytest
from hypothesis import given, strategies as st

from aqcross import aqcube
from aqcross.aqcube import adjacent, build, build_recursive, dim, edges_between, incident_edge


@pytest.mark.parametrize("n", range(1, 11))
def test_direct_matches_recursive(n):
    assert build(n).edge_set() == build_recursive(n)


@pytest.mark.parametrize("n,edges", [(1, 1), (2, 6), (3, 20), (5, 144)])
def test_edge_counts(n, edges):
    cube = build(n)
    assert len(cube.vertices()) == 2**n
    assert cube.num_edges() == edges


def test_aq2_is_k4():
    assert build(2).edge_set() == {(a, b) for a in range(4) for b in range(a + 1, 4)}


def test_build_rejects_zero():
    with pytest.raises(ValueError):
        build(0)


@pytest.mark.parametrize(
    "a,b,want", [("000", "100", 3), ("000", "111", -3), ("000", "001", 1), ("000", "000", 0), ("000", "011", -2)]
)
def test_dim_examples(a, b, want):
    assert dim(a, b) == want


def test_dim_length_mismatch():
    with pytest.raises(ValueError):
        dim("000", "0000")


def test_incident_edge_examples():
    assert incident_edge(0b000, -2, 3) == (0b000, 0b011)
    assert incident_edge(0b000, 3, 3) == (0b000, 0b100)
    e = incident_edge(0b10101, -4, 5)
    assert e == (0b10101, 0b11010)
    assert dim(*e) == -4


def test_incident_edge_rejects_bad_dims():
    for t in (0, -1, 4, -4):
        with pytest.raises(ValueError):
            incident_edge(0, t, 3)


@given(st.integers(2, 24).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1))))
def test_dim_symmetric_and_in_range(args):
    n, a, b = args
    assert dim(a, b) == dim(b, a)
    if adjacent(a, b):
        d = dim(a, b)
        assert -n <= d <= -2 or 1 <= d <= n


@given(st.integers(2, 24).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
def test_each_dimension_has_one_edge(args):
    n, a = args
    others = [incident_edge(a, t, n) for t in aqcube.valid_dims(n)]
    assert len(set(others)) == 2 * n - 1
    for t, (u, v) in zip(aqcube.valid_dims(n), others):
        assert dim(u, v) == t


@pytest.mark.parametrize("n", range(2, 9))
def test_regular(n):
    cube = build(n)
    assert {cube.degree(a) for a in cube.vertices()} == {2 * n - 1}


def test_edges_between():
    cube = build(3)
    assert edges_between(cube, [], cube.vertices()) == []
    assert len(edges_between(cube, [0, 3, 5, 6], [1, 2, 4, 7])) == 16
    assert edges_between(cube, [0, 1], [0, 1]) == [(0, 1)]


def test_k44_witness():
    A, B = aqcube.find_k44_witness()
    assert (A, B) == ((0, 3, 5, 6), (1, 2, 4, 7))
    assert aqcube.is_complete_bipartite(A, B)
    assert not aqcube.is_complete_bipartite((0, 1, 2, 3), (4, 5, 6, 7))


def test_edge_list_format(tmp_path):
    text = aqcube.format_edge_list(build(2))
    assert text.splitlines()[0] == "0 1 1"
    assert len(text.splitlines()) == 6
    path = tmp_path / "aq3.txt"
    aqcube.write_edge_list(build(3), path)
    rows = [tuple(map(int, line.split())) for line in path.read_text().splitlines()]
    assert rows == sorted(rows) and len(rows) == 20
