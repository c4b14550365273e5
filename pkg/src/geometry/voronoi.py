"""
Exact Voronoi Diagrams

Each cell is the bounding box clipped by the half-planes closer to its site
than to every other site. Bisectors of rational sites meet at rational points,
so every vertex is an exact GaussianRational and every predicate is a sign
test on rationals.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from src.numerics.gaussian import GaussianRational
from src.utils.errors import InternalAssertionError, PreconditionError
from src.utils.logger import logger

Point = GaussianRational


def cross(a: Point, b: Point) -> Fraction:
    return a.re * b.im - a.im * b.re


def dot(a: Point, b: Point) -> Fraction:
    return a.re * b.re + a.im * b.im


def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if a, b, c turn counterclockwise, -1 if clockwise, 0 if collinear."""
    value = cross(b - a, c - a)
    return (value > 0) - (value < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when p lies on the closed segment [a, b]."""
    return cross(a - p, b - p) == 0 and dot(a - p, b - p) <= 0


@dataclass(frozen=True)
class Box:
    """Axis-aligned rectangle with rational corners."""

    low: Point
    high: Point

    def corners(self) -> List[Point]:
        """Corners in counterclockwise order from the lower-left one."""
        return [
            self.low,
            GaussianRational(self.high.re, self.low.im),
            self.high,
            GaussianRational(self.low.re, self.high.im),
        ]

    def strictly_contains(self, p: Point) -> bool:
        return self.low.re < p.re < self.high.re and self.low.im < p.im < self.high.im


def bounding_box(sites: Sequence[Point]) -> Box:
    """Bounding rectangle of the sites inflated by max(diameter bound, 1) on each side."""
    if not sites:
        raise PreconditionError("bounding box of an empty site list")
    re_lo = min(s.re for s in sites)
    re_hi = max(s.re for s in sites)
    im_lo = min(s.im for s in sites)
    im_hi = max(s.im for s in sites)
    margin = max(Fraction(1), (re_hi - re_lo) + (im_hi - im_lo))
    return Box(GaussianRational(re_lo - margin, im_lo - margin),
               GaussianRational(re_hi + margin, im_hi + margin))


@dataclass
class PlanarGraph:
    """
    Planar graph of Voronoi cell boundaries.

    Attributes:
        vertices: Exact vertex coordinates
        edges: Undirected edges as sorted index pairs
        cells: For each site, its boundary cycle of vertex indices (counterclockwise)
        box: The clipping rectangle
    """

    vertices: List[Point]
    edges: List[Tuple[int, int]]
    cells: List[List[int]]
    box: Box
    index: Dict[Point, int] = field(default_factory=dict, repr=False)

    def point(self, i: int) -> Point:
        return self.vertices[i]


def _clip(polygon: List[Point], site: Point, other: Point) -> List[Point]:
    """Keep the part of a convex polygon at least as close to site as to other."""
    normal = other - site
    offset = (dot(other, other) - dot(site, site)) / 2

    def inside(p: Point) -> Fraction:
        return offset - dot(p, normal)

    clipped: List[Point] = []
    for k, current in enumerate(polygon):
        following = polygon[(k + 1) % len(polygon)]
        a, b = inside(current), inside(following)
        if a >= 0:
            clipped.append(current)
        if (a > 0 > b) or (a < 0 < b):
            t = a / (a - b)
            clipped.append(current + (following - current) * t)
    deduped: List[Point] = []
    for p in clipped:
        if not deduped or deduped[-1] != p:
            deduped.append(p)
    while len(deduped) > 1 and deduped[0] == deduped[-1]:
        deduped.pop()
    return deduped


def voronoi_cell(site: Point, sites: Sequence[Point], box: Box) -> List[Point]:
    polygon = box.corners()
    for other in sites:
        if other != site:
            polygon = _clip(polygon, site, other)
    return polygon


def voronoi(sites: Sequence[Point], box: Box = None) -> PlanarGraph:
    """
    Voronoi diagram of the sites clipped to a box.

    Args:
        sites: At least one pairwise distinct site
        box: Clipping rectangle (defaults to bounding_box(sites))

    Returns:
        PlanarGraph whose cells list each site's boundary counterclockwise, with
        every graph vertex lying on a cell edge inserted into that edge

    Raises:
        PreconditionError: On an empty or repeated site list, or a box not containing the sites
    """
    sites = list(sites)
    if not sites:
        raise PreconditionError("voronoi needs at least one site")
    if len(set(sites)) != len(sites):
        raise PreconditionError("voronoi sites must be pairwise distinct")
    box = box or bounding_box(sites)
    if not all(box.strictly_contains(s) for s in sites):
        raise PreconditionError("clipping box must strictly contain every site")

    polygons = [voronoi_cell(s, sites, box) for s in sites]
    vertices: List[Point] = sorted({p for polygon in polygons for p in polygon}, key=Point.sort_key)
    index = {p: i for i, p in enumerate(vertices)}

    cells: List[List[int]] = []
    edges = set()
    for polygon in polygons:
        cycle: List[int] = []
        for k, a in enumerate(polygon):
            b = polygon[(k + 1) % len(polygon)]
            cycle.append(index[a])
            between = [p for p in vertices if p != a and p != b and on_segment(p, a, b)]
            between.sort(key=lambda p: dot(p - a, b - a))
            cycle.extend(index[p] for p in between)
        for k, i in enumerate(cycle):
            j = cycle[(k + 1) % len(cycle)]
            edges.add((min(i, j), max(i, j)))
        cells.append(cycle)

    for site, cycle in zip(sites, cells):
        if len(cycle) < 3:
            raise InternalAssertionError(f"degenerate Voronoi cell around {site}")
    logger.debug(f"Voronoi diagram: {len(sites)} cells, {len(vertices)} vertices, {len(edges)} edges")
    return PlanarGraph(vertices, sorted(edges), cells, box, index)
