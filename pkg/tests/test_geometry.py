import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from liarsdom.errors import DuplicateId, DuplicatePosition, EmptyInstance, ParseError, UnknownId
from liarsdom.geometry import (
    Coord,
    PointKind,
    PointRecord,
    are_adjacent,
    build_udg,
    closed_neighborhood,
    format_points,
    max_closed_degree,
    parse_points,
    sq_dist,
)
from liarsdom.reduction import intended_edges

coords = st.builds(Coord, st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
near = st.builds(Coord, st.integers(-15, 15), st.integers(-15, 15))


def pts(*xy):
    return [PointRecord(i, PointKind.NODE, Coord(*p)) for i, p in enumerate(xy)]


@pytest.mark.parametrize(
    "a, b, expected",
    [((0, 0), (0, 0), 0), ((0, 0), (10, 0), 100), ((0, 0), (5, 5), 50)],
)
def test_sq_dist_examples(a, b, expected):
    assert sq_dist(Coord(*a), Coord(*b)) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [((0, 0), (10, 0), True), ((0, 0), (10, 2), False), ((0, 0), (5, 5), True)],
)
def test_are_adjacent_examples(a, b, expected):
    assert are_adjacent(Coord(*a), Coord(*b)) is expected


@given(coords, coords)
def test_adjacency_symmetric_and_commutative(a, b):
    assert sq_dist(a, b) == sq_dist(b, a)
    assert are_adjacent(a, b) == are_adjacent(b, a)
    assert (sq_dist(a, b) == 0) == (a == b)


@given(near, near)
def test_threshold_matches_exact_rational_oracle(a, b):
    assert are_adjacent(a, b) == oracles.adjacent_exact(a, b)


@given(coords, coords)
def test_threshold_exact_at_large_coordinates(a, b):
    assert are_adjacent(a, b) == oracles.adjacent_exact(a, b)


def test_build_udg_two_points_at_unit_distance():
    inst = build_udg(pts((0, 0), (10, 0)))
    assert inst.edges == {(0, 1)}


def test_build_udg_empty():
    inst = build_udg([])
    assert len(inst) == 0 and inst.edges == frozenset()


def test_build_udg_rejects_duplicates():
    with pytest.raises(DuplicatePosition):
        build_udg(pts((0, 0), (0, 0)))
    with pytest.raises(DuplicateId):
        build_udg([PointRecord(0, PointKind.NODE, Coord(0, 0)), PointRecord(0, PointKind.NODE, Coord(1, 0))])
    with pytest.raises(DuplicateId):
        build_udg([PointRecord(1, PointKind.NODE, Coord(0, 0))])


def test_instance_a_edges_are_the_intended_chain(reduced):
    _, _, inst, rmap = reduced["A"]
    positions = [p.pos for p in inst.points]
    assert oracles.udg_edges(positions) == set(inst.edges) == intended_edges(rmap)


def test_closed_neighborhood_examples(reduced):
    iso = build_udg(pts((0, 0), (100, 100)))
    assert closed_neighborhood(iso, 0) == {0}
    _, _, inst, rmap = reduced["A"]
    p0 = rmap.node_point[0]
    x0, _, _ = rmap.support_chain(0)
    j10 = rmap.edge_chain((0, 1))[1]
    assert closed_neighborhood(inst, p0) == {p0, x0, j10}
    chain = build_udg(pts((0, 0), (10, 0), (20, 0)))
    assert len(closed_neighborhood(chain, 1)) == 3
    with pytest.raises(UnknownId):
        closed_neighborhood(chain, 3)


def test_max_closed_degree_examples(reduced):
    assert max_closed_degree(build_udg(pts((0, 0)))) == 1
    assert max_closed_degree(reduced["A"][2]) == 3
    assert max_closed_degree(reduced["C"][2]) == 5
    with pytest.raises(EmptyInstance):
        max_closed_degree(build_udg([]))


@given(st.lists(near, min_size=1, max_size=12, unique=True), st.randoms())
def test_build_udg_order_insensitive_up_to_relabeling(positions, rnd):
    base = build_udg(pts(*positions))
    perm = list(range(len(positions)))
    rnd.shuffle(perm)
    # point i of the base instance gets id perm[i]; input order shuffled too
    shuffled = [PointRecord(perm[i], PointKind.NODE, positions[i]) for i in range(len(positions))]
    rnd.shuffle(shuffled)
    other = build_udg(shuffled)
    inverse = {perm[i]: i for i in range(len(perm))}
    mapped = {tuple(sorted((inverse[u], inverse[v]))) for u, v in other.edges}
    assert mapped == set(base.edges)


def test_points_file_round_trip(reduced):
    inst = reduced["C"][2]
    text = format_points(inst)
    again = parse_points(text)
    assert again.points == inst.points
    assert format_points(again) == text


def test_points_file_comments_and_errors():
    inst = parse_points("# header\n0 node 0 0\n\n1 sx 2 0\n")
    assert [p.kind for p in inst.points] == [PointKind.NODE, PointKind.SUPPORT_X]
    for bad in ["0 node 0\n", "0 blob 0 0\n", "0 node 0 0\n0 node 5 5\n", "0 node 2000000000 0\n", "0 node 1.5 0\n"]:
        with pytest.raises(ParseError):
            parse_points(bad)


def test_random_integer_pairs_against_oracle():
    rng = random.Random(7)
    for _ in range(2000):
        a = Coord(rng.randint(-30, 30), rng.randint(-30, 30))
        b = Coord(rng.randint(-30, 30), rng.randint(-30, 30))
        assert are_adjacent(a, b) == oracles.adjacent_exact(a, b)
