"""
Van Kampen Pipeline

Wires the stages end to end: discriminant in the fiber variable, its
squarefree part, certified critical values, Voronoi loops around them,
certified fibers over the loop vertices, edge braids, loop braids, the Van
Kampen presentation and its Tietze simplification.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from config.settings import MAX_COSETS
from src.catalog import catalog
from src.geometry.loops import LoopSystem, dump_loop_system, loop_system, plot_loop_system
from src.geometry.voronoi import PlanarGraph, voronoi
from src.groups import words
from src.groups.abelian import abelianization, format_abelianization
from src.groups.coset_enumeration import central_in_quotient, todd_coxeter
from src.groups.hurwitz import vankampen
from src.groups.matching import presentations_match
from src.groups.presentation import (
    Presentation,
    format_presentation,
    parse_presentation,
    total_length,
    with_quadratic_relators,
)
from src.groups.tietze import tietze_simplify
from src.groups.words import FreeWord
from src.monodromy.braid import BraidWord, format_braid_file
from src.monodromy.fibered import FiberedCurve
from src.monodromy.follower import follow_edge
from src.numerics.gaussian import GaussianRational
from src.polynomials.algebra import discriminant, is_squarefree, squarefree_part
from src.polynomials.multipoly import MultiPoly, format_poly, parse_poly
from src.roots.certification import CertifiedConfiguration, certify_roots
from src.pipeline.report import (
    CatalogReport,
    PipelineConfig,
    VerificationReport,
    VKReport,
)
from src.utils.errors import (
    CosetOverflowError,
    PreconditionError,
    StageError,
    VanKampenError,
)
from src.utils.logger import logger


@contextmanager
def stage(name: str) -> Iterator[None]:
    """Log a pipeline stage and tag its errors."""
    with logger.contextualize(stage=name):
        logger.info(f"Stage {name}...")
        started = time.time()
        try:
            yield
        except StageError:
            raise
        except VanKampenError as e:
            raise StageError(name, e) from e
        logger.info(f"Stage {name} done in {time.time() - started:.2f}s")


def choose_fiber_variable(p: MultiPoly, requested: Optional[str] = None) -> Tuple[str, str]:
    """
    (fiber, base) variables of a bivariate curve.

    The fiber variable defaults to the first variable in which p has a
    nonzero constant leading coefficient.

    Raises:
        PreconditionError: If p is not bivariate or not monic in the fiber variable
    """
    if len(p.variables) != 2:
        raise PreconditionError(f"expected a curve in two variables, got {p.variables}")
    candidates = [requested] if requested else list(p.variables)
    for var in candidates:
        if var not in p.variables:
            raise PreconditionError(f"fiber variable {var!r} is not one of {p.variables}")
        lead = p.leading_coefficient(var)
        if p.degree(var) >= 1 and lead.is_constant():
            base = [v for v in p.variables if v != var][0]
            return var, base
    var = candidates[0]
    lead = p.leading_coefficient(var)
    raise PreconditionError(
        f"curve is not monic in {var}: leading coefficient {format_poly(lead)} "
        f"vanishes on {format_poly(lead)} = 0"
    )


def _edge_task(args) -> BraidWord:
    curve, y0, y1, start, finish, guard, spot_checks, seed = args
    return follow_edge(curve, y0, y1, start, finish, guard=guard, spot_checks=spot_checks, seed=seed)


def edge_braids(curve: FiberedCurve, graph: PlanarGraph, edges: Sequence[Tuple[int, int]],
                fibers: Dict[int, CertifiedConfiguration], config: PipelineConfig) -> Dict[Tuple[int, int], BraidWord]:
    """Braid of every undirected edge (i < j), traversed from i to j."""
    tasks = [
        (curve, graph.point(i), graph.point(j), fibers[i], fibers[j],
         config.guard_digits, config.spot_checks, config.seed)
        for i, j in edges
    ]
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            results = list(executor.map(_edge_task, tasks))
    else:
        results = [_edge_task(task) for task in tasks]
    return dict(zip(edges, results))


def loop_braids(system: LoopSystem, braids: Dict[Tuple[int, int], BraidWord], strands: int) -> List[BraidWord]:
    """Concatenate edge braids along every loop; reverse traversal uses the inverse word."""
    result = []
    for loop in system.loops:
        word = BraidWord(max(strands, 1))
        for a, b in loop.segments():
            word = word + (braids[(a, b)] if a < b else braids[(b, a)].inverse())
        result.append(word)
    return result


class VKRun:
    """Artifacts of one pipeline run."""

    def __init__(self, curve: MultiPoly, fiber_var: str, base_var: str, strands: int,
                 sites: List[GaussianRational], graph: Optional[PlanarGraph],
                 system: Optional[LoopSystem], braids: List[BraidWord],
                 raw: Presentation, presentation: Presentation):
        self.curve = curve
        self.fiber_var = fiber_var
        self.base_var = base_var
        self.strands = strands
        self.sites = sites
        self.graph = graph
        self.system = system
        self.braids = braids
        self.raw = raw
        self.presentation = presentation

    def report(self, config: PipelineConfig) -> VKReport:
        loop_dump = None
        if config.emit_loops and self.graph is not None:
            loop_dump = dump_loop_system(self.graph, self.system, self.sites)
        return VKReport(
            curve=format_poly(self.curve),
            fiber_var=self.fiber_var,
            base_var=self.base_var,
            strands=self.strands,
            critical_values=len(self.sites),
            loops=len(self.braids),
            raw_relators=len(self.raw.relators),
            presentation=format_presentation(self.presentation),
            braids=format_braid_file(self.braids, max(self.strands, 1)) if config.emit_braids else None,
            loop_dump=loop_dump,
        )


def run_vk(curve: MultiPoly, config: PipelineConfig) -> VKRun:
    """
    Presentation of the fundamental group of the complement of a plane curve.

    Args:
        curve: Squarefree bivariate polynomial, monic in its fiber variable
        config: Pipeline settings

    Returns:
        VKRun with the raw and the simplified presentation

    Raises:
        StageError: Wrapping the failure of a stage
    """
    with stage("precondition"):
        fiber_var, base_var = choose_fiber_variable(curve, config.fiber_var)
        if not is_squarefree(curve, fiber_var):
            raise PreconditionError(
                f"curve is not squarefree in {fiber_var}; reduce it first (squarefree_part)"
            )
        fibered = FiberedCurve.from_poly(curve, fiber_var, base_var)
        n = fibered.degree
        logger.info(f"Curve of degree {n} in {fiber_var} over {base_var}")

    with stage("discriminant"):
        disc = discriminant(curve, fiber_var)
        reduced = squarefree_part(disc, base_var) if not disc.is_constant() else disc
        logger.info(f"Discriminant degree {disc.degree(base_var)}, reduced degree {reduced.degree(base_var)}")

    graph = system = None
    braids: List[BraidWord] = []
    sites: List[GaussianRational] = []
    if reduced.degree(base_var) >= 1:
        with stage("certify-sites"):
            sites = list(certify_roots(reduced.to_dense(base_var), seed=config.seed,
                                       guard=config.guard_digits).points)
            logger.info(f"Certified {len(sites)} critical values")

        with stage("loops"):
            graph = voronoi(sites)
            system = loop_system(graph, sites)
            if config.plot_loops:
                plot_loop_system(graph, system, sites, config.plot_loops)

        with stage("certify-fibers"):
            used = sorted({v for loop in system.loops for v in loop.vertices})
            fibers = {
                v: certify_roots(fibered.fiber(graph.point(v)), seed=config.seed, guard=config.guard_digits)
                for v in used
            }
            logger.info(f"Certified fibers over {len(fibers)} vertices")

        with stage("monodromy"):
            edges = sorted({(min(a, b), max(a, b)) for loop in system.loops for a, b in loop.segments()})
            logger.info(f"Following {len(edges)} edges with {config.jobs} worker(s)")
            per_edge = edge_braids(fibered, graph, edges, fibers, config)
            braids = loop_braids(system, per_edge, n)

    with stage("vankampen"):
        raw = vankampen(n, braids)
        logger.info(f"Raw presentation: {raw.rank} generators, {len(raw.relators)} relators")

    with stage("simplify"):
        presentation = tietze_simplify(raw, seed=config.seed, budget=config.simplify_budget)
        logger.info(
            f"Simplified presentation: {presentation.rank} generators, "
            f"{len(presentation.relators)} relators, length {total_length(presentation)}"
        )
    return VKRun(curve, fiber_var, base_var, n, sites, graph, system, braids, raw, presentation)


def run_vk_text(text: str, config: PipelineConfig) -> VKRun:
    with stage("parse"):
        curve = parse_poly(text)
    return run_vk(curve, config)


def verify_presentation(p: Presentation, label: str = "presentation", quadratic: bool = True,
                        central_word: Optional[FreeWord] = None, expected_order: Optional[int] = None,
                        max_cosets: int = MAX_COSETS) -> VerificationReport:
    """
    Abelianization, optional quadratic-quotient order and centrality check.

    Coset overflow is reported in the result rather than raised.
    """
    torsion, free_rank = abelianization(p)
    report = VerificationReport(
        label=label,
        generators=list(p.generators),
        relators=len(p.relators),
        total_length=total_length(p),
        abelianization=format_abelianization(torsion, free_rank),
        quadratic=quadratic,
        expected_order=expected_order,
        central_word=p.format_word(central_word) if central_word is not None else None,
    )
    if not quadratic:
        return report
    quotient = with_quadratic_relators(p)
    try:
        report.order, table = todd_coxeter(quotient, (), max_cosets)
        if central_word is not None:
            report.central = central_in_quotient(quotient, (), central_word, max_cosets, table=table)
    except CosetOverflowError as e:
        logger.warning(f"{label}: {e}")
        report.overflow = True
    logger.info(f"{label}: order {report.order}, abelianization {report.abelianization}")
    return report


def verify_presentation_text(text: str, quadratic: bool = True, central: Optional[str] = None,
                             expected_order: Optional[int] = None,
                             max_cosets: int = MAX_COSETS) -> VerificationReport:
    """Parse a presentation document and verify it; `central` may be `word^k`."""
    p = parse_presentation(text)
    central_word = None
    if central:
        base, _, exponent = central.partition("^")
        central_word = words.power(p.word(base.strip().strip("()")), int(exponent) if exponent else 1)
    return verify_presentation(p, "presentation", quadratic, central_word, expected_order, max_cosets)


def verify_catalog_entry(group_id: str, max_cosets: int = MAX_COSETS) -> List[VerificationReport]:
    """
    Verify every recorded presentation of a catalog group.

    Groups too large to enumerate get the abelianization only. Presentations
    with a redundant relation are verified a second time without it.
    """
    entry = catalog.get_entry(group_id)
    reports = []
    for spec in entry.presentations:
        variants = [(spec.name, spec.to_presentation())]
        if spec.redundant:
            variants.append((f"{spec.name} (without redundant)", spec.to_presentation(drop_redundant=True)))
        for name, p in variants:
            reports.append(verify_presentation(
                p, label=f"{entry.group_id} {name}", quadratic=entry.enumerable,
                central_word=spec.central_word(), expected_order=entry.order, max_cosets=max_cosets,
            ))
    return reports


def run_catalog(group_id: str, config: PipelineConfig) -> CatalogReport:
    """
    Van Kampen presentation of a catalog curve, checked against the recorded one.

    Entries without a recorded plane run on a searched one (fiber x).

    Raises:
        UnsupportedEntryError: If the entry has no matrix or no acceptable plane
    """
    entry = catalog.get_entry(group_id)
    logger.info("=" * 60)
    logger.info(f"CATALOG RUN {entry.group_id}")
    logger.info("=" * 60)
    with stage("plane-curve"):
        curve = catalog.plane_curve(entry.group_id)
    fiber_var = config.fiber_var or (entry.plane.fiber if entry.plane else "x")
    run = run_vk(curve, config.model_copy(update={"fiber_var": fiber_var}))
    target_spec = entry.presentation_spec()
    with stage("verify"):
        computed = verify_presentation(run.presentation, f"{entry.group_id} computed",
                                       expected_order=entry.order, max_cosets=config.max_cosets)
        target = verify_presentation(target_spec.to_presentation(), f"{entry.group_id} {target_spec.name}",
                                     central_word=target_spec.central_word(), expected_order=entry.order,
                                     max_cosets=config.max_cosets)
    matches = any(presentations_match(run.presentation, spec.to_presentation())
                  for spec in entry.presentations
                  if len(spec.generators) == run.presentation.rank)
    return CatalogReport(group_id=entry.group_id, run=run.report(config), computed=computed,
                         target=target, matches_target=matches)
