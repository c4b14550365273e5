"""
Meridian Loop Systems

Builds one based loop per Voronoi site: a path along a breadth-first
spanning tree of the cell graph from the common basepoint to the site's
cell, once around the cell counterclockwise, and back along the same path.
Tails that follow one tree never cross, so the loops freely generate the
fundamental group of the punctured plane.
"""
from dataclasses import dataclass
from functools import cmp_to_key
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from src.geometry.voronoi import PlanarGraph, Point, cross, dot, on_segment
from src.numerics.gaussian import gauss_norm
from src.utils.errors import InternalAssertionError, PreconditionError
from src.utils.logger import logger


@dataclass(frozen=True)
class Loop:
    """Closed polyline of graph vertex indices; first == last == base."""

    base: int
    vertices: Tuple[int, ...]

    def segments(self) -> List[Tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class LoopSystem:
    """Common basepoint, ordered meridians, and the site each meridian encircles."""

    basepoint: int
    loops: Tuple[Loop, ...]
    site_order: Tuple[int, ...]

    def __len__(self):
        return len(self.loops)


def _quadrant(v: Point) -> int:
    if v.re > 0 and v.im >= 0:
        return 0
    if v.re <= 0 and v.im > 0:
        return 1
    if v.re < 0 and v.im <= 0:
        return 2
    return 3


def winding_number(points: Sequence[Point], p: Point) -> int:
    """
    Exact winding number of a closed polyline around p by quadrant crossings.

    Args:
        points: Polyline vertices with points[0] == points[-1]
        p: Query point, not on the polyline

    Raises:
        PreconditionError: If p lies on the polyline
    """
    total = 0
    for a, b in zip(points, points[1:]):
        if on_segment(p, a, b):
            raise PreconditionError(f"point {p} lies on the loop")
        u, v = a - p, b - p
        delta = (_quadrant(v) - _quadrant(u)) % 4
        if delta == 1:
            total += 1
        elif delta == 3:
            total -= 1
        elif delta == 2:
            total += 2 if cross(u, v) > 0 else -2
    return total // 4


def loop_points(graph: PlanarGraph, loop: Loop) -> List[Point]:
    return [graph.point(i) for i in loop.vertices]


def nearest_vertex(graph: PlanarGraph, hint: Point) -> int:
    """Graph vertex nearest to hint; ties broken by lexicographic (re, im)."""
    return min(range(len(graph.vertices)),
               key=lambda i: (gauss_norm(graph.point(i) - hint), graph.point(i).sort_key()))


def spanning_tree(graph: PlanarGraph, root: int) -> nx.DiGraph:
    """Breadth-first spanning tree, deterministic through sorted insertion order."""
    g = nx.Graph()
    g.add_nodes_from(range(len(graph.vertices)))
    g.add_edges_from(sorted(graph.edges))
    if not nx.is_connected(g):
        raise InternalAssertionError("Voronoi graph is disconnected")
    return nx.bfs_tree(g, root, sort_neighbors=sorted)


def _tree_path(tree: nx.DiGraph, root: int, target: int) -> List[int]:
    return nx.shortest_path(tree, root, target)


def loop_system(graph: PlanarGraph, sites: Sequence[Point], hint: Point = None) -> LoopSystem:
    """
    Ordered meridian loops around every site.

    Args:
        graph: Voronoi graph of these sites
        sites: Sites, in the order of graph.cells
        hint: Basepoint hint (defaults to the box's lower-left corner)

    Returns:
        LoopSystem with loops sorted counterclockwise by the direction of their
        site as seen from the basepoint; the winding matrix is asserted to be
        the identity

    Raises:
        InternalAssertionError: If the winding matrix is not the identity
    """
    hint = graph.box.low if hint is None else hint
    base = nearest_vertex(graph, hint)
    tree = spanning_tree(graph, base)
    depth: Dict[int, int] = nx.single_source_shortest_path_length(tree, base)
    base_point = graph.point(base)

    def compare(i: int, j: int) -> int:
        u, v = sites[i] - base_point, sites[j] - base_point
        turn = cross(u, v)
        if turn:
            return -1 if turn > 0 else 1
        return (dot(u, u) > dot(v, v)) - (dot(u, u) < dot(v, v))

    order = sorted(range(len(sites)), key=cmp_to_key(compare))
    loops: List[Loop] = []
    for site_index in order:
        cycle = graph.cells[site_index]
        start = min(range(len(cycle)), key=lambda k: (depth[cycle[k]], cycle[k]))
        rotated = cycle[start:] + cycle[:start] + [cycle[start]]
        approach = _tree_path(tree, base, cycle[start])
        vertices = approach[:-1] + rotated + list(reversed(approach[:-1]))
        loops.append(Loop(base, tuple(vertices)))

    system = LoopSystem(base, tuple(loops), tuple(order))
    check_winding_matrix(graph, system, sites)
    logger.debug(f"Loop system: {len(loops)} meridians based at vertex {base}")
    return system


def check_winding_matrix(graph: PlanarGraph, system: LoopSystem, sites: Sequence[Point]) -> None:
    """Assert that meridian k winds once around its own site and never around another."""
    for loop, own in zip(system.loops, system.site_order):
        points = loop_points(graph, loop)
        for j, site in enumerate(sites):
            expected = 1 if j == own else 0
            if winding_number(points, site) != expected:
                raise InternalAssertionError(
                    f"meridian around site {own} winds {winding_number(points, site)} times around site {j}"
                )


def product_loop(graph: PlanarGraph, system: LoopSystem) -> List[Point]:
    """Concatenation of all meridians in order, as one closed polyline."""
    points: List[Point] = [graph.point(system.basepoint)]
    for loop in system.loops:
        points.extend(loop_points(graph, loop)[1:])
    return points


def dump_loop_system(graph: PlanarGraph, system: LoopSystem, sites: Sequence[Point]) -> str:
    """
    Line-oriented text dump for external plotting.

    Lines: `V idx re im`, `E i j`, `S idx re im`, `B idx`, `L k i j ...`.
    """
    lines = [f"V {i} {p.re} {p.im}" for i, p in enumerate(graph.vertices)]
    lines += [f"E {i} {j}" for i, j in graph.edges]
    lines += [f"S {i} {s.re} {s.im}" for i, s in enumerate(sites)]
    lines.append(f"B {system.basepoint}")
    for k, loop in enumerate(system.loops):
        lines.append(f"L {k} " + " ".join(str(i) for i in loop.vertices))
    return "\n".join(lines) + "\n"


def plot_loop_system(graph: PlanarGraph, system: LoopSystem, sites: Sequence[Point], save_path: Path) -> None:
    """Render cells, sites and meridians with matplotlib (coordinates converted for display only)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 8))
    for i, j in graph.edges:
        a, b = graph.point(i), graph.point(j)
        ax.plot([float(a.re), float(b.re)], [float(a.im), float(b.im)], color="#bbbbbb", linewidth=0.8)
    colors = plt.cm.tab10.colors
    for k, loop in enumerate(system.loops):
        points = loop_points(graph, loop)
        ax.plot([float(p.re) for p in points], [float(p.im) for p in points],
                color=colors[k % len(colors)], linewidth=1.2, alpha=0.8, label=f"loop {k}")
    ax.scatter([float(s.re) for s in sites], [float(s.im) for s in sites], color="black", s=12, zorder=3)
    base = graph.point(system.basepoint)
    ax.scatter([float(base.re)], [float(base.im)], color="red", marker="s", s=30, zorder=4)
    ax.set_aspect("equal")
    ax.set_title("Meridian loop system")
    if len(system.loops) <= 10:
        ax.legend(loc="upper right", fontsize=8)
    plt.tight_layout()
    save_path = Path(save_path)
    save_path.parent.mkdir(parents=True, exist_ok=True)
    plt.savefig(save_path, dpi=150)
    plt.close(fig)
    logger.info(f"Loop plot saved to {save_path}")
