"""
Tests for exact Voronoi diagrams and meridian loop systems
"""
import random
from fractions import Fraction

import pytest

from src.geometry.loops import (
    dump_loop_system,
    loop_points,
    loop_system,
    product_loop,
    winding_number,
)
from src.geometry.voronoi import Box, bounding_box, orient, voronoi
from src.numerics.gaussian import GaussianRational
from src.utils.errors import PreconditionError


def g(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def winding_matrix(graph, system, sites):
    return [[winding_number(loop_points(graph, loop), site) for site in sites] for loop in system.loops]


def identity_in_site_order(system, n):
    matrix = [[0] * n for _ in range(n)]
    for k, own in enumerate(system.site_order):
        matrix[k][own] = 1
    return matrix


def test_orient():
    assert orient(g(0), g(1), g(0, 1)) == 1
    assert orient(g(0), g(0, 1), g(1)) == -1
    assert orient(g(0), g(1), g(2)) == 0


def test_bounding_box_margin():
    box = bounding_box([g(0), g(2), g(10)])
    assert box == Box(g(-10, -10), g(20, 10))
    assert bounding_box([g(3, 4)]) == Box(g(2, 3), g(4, 5))


def test_voronoi_single_site_is_the_box():
    graph = voronoi([g(0)])
    assert set(graph.vertices) == {g(-1, -1), g(1, -1), g(1, 1), g(-1, 1)}
    assert len(graph.edges) == 4
    assert len(graph.cells) == 1


def test_voronoi_two_sites_split_at_bisector():
    sites = [g(-1), g(1)]
    graph = voronoi(sites)
    left = {graph.point(i) for i in graph.cells[0]}
    right = {graph.point(i) for i in graph.cells[1]}
    assert all(p.re <= 0 for p in left)
    assert all(p.re >= 0 for p in right)
    assert left & right == {g(0, -2), g(0, 2)}


def test_voronoi_collinear_bisectors():
    graph = voronoi([g(0), g(2), g(10)])
    interior = {p.re for p in graph.vertices} - {graph.box.low.re, graph.box.high.re}
    assert interior == {1, 6}
    assert len(graph.cells) == 3


def test_voronoi_vertices_are_exact():
    sites = [g(0), g(Fraction(1, 3), 1), g(-2, Fraction(1, 7))]
    graph = voronoi(sites)
    for cycle, site in zip(graph.cells, sites):
        for i in cycle:
            p = graph.point(i)
            distance = (p - site).re ** 2 + (p - site).im ** 2
            for other in sites:
                assert distance <= (p - other).re ** 2 + (p - other).im ** 2


def test_voronoi_preconditions():
    with pytest.raises(PreconditionError):
        voronoi([])
    with pytest.raises(PreconditionError):
        voronoi([g(1), g(1)])
    with pytest.raises(PreconditionError):
        voronoi([g(0), g(5)], Box(g(-1, -1), g(1, 1)))


def test_winding_number_examples():
    square = [g(-1, -1), g(1, -1), g(1, 1), g(-1, 1), g(-1, -1)]
    assert winding_number(square, g(0)) == 1
    assert winding_number(list(reversed(square)), g(0)) == -1
    assert winding_number(square, g(5)) == 0
    with pytest.raises(PreconditionError):
        winding_number(square, g(1, 0))


def test_winding_number_double_loop():
    square = [g(-1, -1), g(1, -1), g(1, 1), g(-1, 1), g(-1, -1)]
    assert winding_number(square + square[1:], g(0)) == 2


def test_loop_system_single_site():
    sites = [g(0)]
    graph = voronoi(sites)
    system = loop_system(graph, sites)
    assert len(system) == 1
    assert graph.point(system.basepoint) == graph.box.low
    loop = system.loops[0]
    assert loop.vertices[0] == loop.vertices[-1] == system.basepoint
    assert winding_matrix(graph, system, sites) == [[1]]


@pytest.mark.parametrize("sites", [
    [g(-1), g(1)],
    [g(0), g(2), g(10)],
    [g(0), g(3, 1), g(-2, 2), g(1, -4)],
])
def test_loop_system_winding_matrix(sites):
    graph = voronoi(sites)
    system = loop_system(graph, sites)
    assert sorted(system.site_order) == list(range(len(sites)))
    assert winding_matrix(graph, system, sites) == identity_in_site_order(system, len(sites))
    product = product_loop(graph, system)
    assert all(winding_number(product, site) == 1 for site in sites)


def test_loop_system_random_sites():
    rng = random.Random(8)
    for _ in range(10):
        sites = list({g(Fraction(rng.randint(-20, 20), 4), Fraction(rng.randint(-20, 20), 4))
                      for _ in range(rng.randint(2, 7))})
        graph = voronoi(sites)
        system = loop_system(graph, sites)
        assert winding_matrix(graph, system, sites) == identity_in_site_order(system, len(sites))
        for loop in system.loops:
            assert all(graph.point(v) not in sites for v in loop.vertices)


def test_loops_follow_graph_edges():
    sites = [g(0), g(2), g(10)]
    graph = voronoi(sites)
    system = loop_system(graph, sites)
    edges = set(graph.edges)
    for loop in system.loops:
        for a, b in loop.segments():
            assert (min(a, b), max(a, b)) in edges


def test_dump_loop_system_format():
    sites = [g(-1), g(1)]
    graph = voronoi(sites)
    system = loop_system(graph, sites)
    lines = dump_loop_system(graph, system, sites).splitlines()
    kinds = [line.split()[0] for line in lines]
    assert kinds.count("V") == len(graph.vertices)
    assert kinds.count("E") == len(graph.edges)
    assert kinds.count("S") == 2
    assert kinds.count("B") == 1
    assert kinds.count("L") == 2
