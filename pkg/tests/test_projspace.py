import pytest
from hypothesis import given, strategies as st

from smoothpencil.gf import field_from_spec, make_field
from smoothpencil.projspace import (
    ProjLine,
    ProjPoint,
    count_points,
    enum_lines,
    enum_points,
    iter_point_coords,
    line_through,
    normalize,
    parse_point,
    point_at,
    point_index,
    points_on_line,
)


def test_counts():
    assert count_points(2, 2) == 7
    assert count_points(3, 1) == 4
    assert count_points(2, 3) == 15
    assert sum(1 for _ in enum_lines(make_field(2))) == 7
    assert sum(1 for _ in enum_lines(make_field(3))) == 13
    assert count_points(53, 2) == 2863


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (4, 3), (5, 1), (9, 2)])
def test_enumeration_is_normalized_and_complete(q, n):
    F = field_from_spec(q)
    pts = list(iter_point_coords(F, n))
    assert len(pts) == len(set(pts)) == count_points(q, n)
    for i, p in enumerate(pts):
        first = next(c for c in p if c)
        assert first == 1
        assert point_index(F, p) == i and point_at(F, n, i) == p


def test_enumeration_order():
    pts = list(iter_point_coords(make_field(2), 2))
    assert pts == [(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1), (0, 1, 0), (0, 1, 1), (0, 0, 1)]


def test_normalize():
    F = make_field(5)
    assert normalize(F, (0, 2, 4)) == (0, 1, 2)
    with pytest.raises(ValueError):
        normalize(F, (0, 0, 0))
    assert ProjPoint(F, (3, 1, 0)).coords == (1, 2, 0)


def test_line_points_example():
    L = ProjLine(make_field(2), (1, 0, 0))
    pts, _ = points_on_line(L)
    assert {p.coords for p in pts} == {(0, 1, 0), (0, 0, 1), (0, 1, 1)}


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_every_line_has_q_plus_one_incident_points(q):
    F = field_from_spec(q)
    through = {p: 0 for p in iter_point_coords(F, 2)}
    total = 0
    for L in enum_lines(F):
        pts, _ = points_on_line(L)
        assert len({p.coords for p in pts}) == q + 1
        for p in pts:
            assert L.contains(p.coords)
            through[p.coords] += 1
        total += len(pts)
    assert total == (q * q + q + 1) * (q + 1)
    assert set(through.values()) == {q + 1}


def test_line_through_examples():
    F2, F3 = make_field(2), make_field(3)
    L = line_through(ProjPoint(F2, (1, 0, 0)), ProjPoint(F2, (0, 1, 0)))
    assert L.coords == (0, 0, 1)
    P, Q = ProjPoint(F3, (1, 1, 1)), ProjPoint(F3, (1, 2, 0))
    L = line_through(P, Q)
    assert L.contains(P.coords) and L.contains(Q.coords)
    with pytest.raises(ValueError):
        line_through(P, P)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_line_through_recovers_every_line(q):
    F = field_from_spec(q)
    for L in enum_lines(F):
        pts, _ = points_on_line(L)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                assert line_through(pts[i], pts[j]) == L


@given(st.sampled_from([5, 7, 8, 9, 11]), st.data())
def test_line_through_is_symmetric(q, data):
    F = field_from_spec(q)
    N = count_points(q, 2)
    i = data.draw(st.integers(0, N - 1))
    j = data.draw(st.integers(0, N - 1).filter(lambda k: k != i))
    P, Q = ProjPoint(F, point_at(F, 2, i)), ProjPoint(F, point_at(F, 2, j))
    assert line_through(P, Q) == line_through(Q, P)


def test_parse_point():
    F = make_field(3)
    assert parse_point("[2:1:0]", F).coords == (1, 2, 0)
    with pytest.raises(ValueError):
        parse_point("1:2", F)
    assert [p.coords for p in enum_points(F, 1)] == [(1, 0), (1, 1), (1, 2), (0, 1)]
