"""
Reflection Group Catalog

Embedded data for the exceptional complex reflection groups G24, G27, G29,
G31, G33 (and the presentation of G34): basic-derivation matrices, weights of
the basic invariants, first invariants, restriction planes and braid group
presentations with their expected quotient orders.
"""
import time
from fractions import Fraction
from functools import lru_cache
from itertools import islice, product
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

import yaml
from pydantic import BaseModel

from config.settings import CATALOG_PATH, PLANE_SEARCH_BOUND, PLANE_SEARCH_LIMIT
from src.groups import words
from src.groups.presentation import Presentation, format_presentation, parse_presentation
from src.groups.words import FreeWord
from src.polynomials.algebra import discriminant, hessian_det, substitute, squarefree_part
from src.polynomials.matrix import PolyMatrix, det_bareiss
from src.polynomials.multipoly import MultiPoly, format_poly, parse_poly
from src.utils.errors import PreconditionError, UnsupportedEntryError
from src.utils.logger import logger

PLANE_VARIABLES = ("x", "y")


class CentralWord(BaseModel):
    word: str
    power: int


class PresentationSpec(BaseModel):
    name: str
    generators: List[str]
    relations: List[str]
    central: Optional[CentralWord] = None
    redundant: List[str] = []

    def text(self, drop_redundant: bool = False) -> str:
        relations = [r for r in self.relations if not (drop_redundant and r in self.redundant)]
        lines = ["gens: " + " ".join(self.generators)]
        for relation in relations:
            members = [m.strip() for m in relation.split("=")]
            if drop_redundant:
                # a chain member listed as redundant only drops that link
                kept = [members[0]]
                for member in members[1:]:
                    if f"{kept[-1]} = {member}" not in self.redundant:
                        kept.append(member)
                members = kept
            lines.append(" = ".join(members))
        return "\n".join(lines) + "\n"

    def to_presentation(self, drop_redundant: bool = False) -> Presentation:
        return parse_presentation(self.text(drop_redundant))

    def central_word(self) -> Optional[FreeWord]:
        if self.central is None:
            return None
        base = words.parse_word(self.central.word, self.generators)
        return words.power(base, self.central.power)


class FirstInvariant(BaseModel):
    polynomial: str
    hessian_scale: int
    hessian_degree: int


class ReferenceDiscriminant(BaseModel):
    polynomial: str
    scale: int
    rescale: Dict[str, str]


class AtInfinity(BaseModel):
    degree: int
    polynomial: str


class Plane(BaseModel):
    fiber: str = "x"
    base: str = "y"
    bindings: Dict[str, str]


class PlaneCheck(BaseModel):
    """Outcome of testing a restriction plane."""

    bindings: Dict[str, str]
    monic: bool
    squarefree: bool
    fiber_degree: int
    critical_values: int

    @property
    def accepted(self) -> bool:
        return self.monic and self.squarefree


class CatalogEntry(BaseModel):
    group_id: str
    variables: List[str]
    weights: List[int]
    codegrees: Optional[List[int]] = None
    order: int
    prefactor: str = "1"
    matrix: Optional[List[List[str]]] = None
    first_invariant: Optional[FirstInvariant] = None
    reference_discriminant: Optional[ReferenceDiscriminant] = None
    at_infinity: Optional[AtInfinity] = None
    plane: Optional[Plane] = None
    enumerable: bool = True
    presentations: List[PresentationSpec]

    @property
    def has_matrix(self) -> bool:
        return self.matrix is not None

    def poly_matrix(self) -> PolyMatrix:
        if self.matrix is None:
            raise UnsupportedEntryError(f"{self.group_id} has no basic-derivation matrix")
        prefactor = parse_poly(self.prefactor, ()).constant_term()
        return PolyMatrix.from_text(self.matrix, self.variables, prefactor)

    def weight_map(self) -> Dict[str, int]:
        return dict(zip(self.variables, self.weights))

    def presentation_spec(self, name: str = "primary") -> PresentationSpec:
        for spec in self.presentations:
            if spec.name == name:
                return spec
        raise PreconditionError(f"{self.group_id} has no presentation named {name!r}")

    def presentation(self, name: str = "primary") -> Presentation:
        return self.presentation_spec(name).to_presentation()


@lru_cache(maxsize=None)
def load_catalog(path: Path = CATALOG_PATH) -> Dict[str, CatalogEntry]:
    """Read and validate the YAML catalog."""
    with open(path, "r") as f:
        raw = yaml.safe_load(f)
    entries = {
        group_id: CatalogEntry(group_id=group_id, **data)
        for group_id, data in raw["groups"].items()
    }
    logger.debug(f"Loaded {len(entries)} catalog entries from {path}")
    return entries


def catalog_ids() -> List[str]:
    return list(load_catalog())


def get_entry(group_id: str) -> CatalogEntry:
    """
    Catalog entry by id (`G24`, `g24` and `24` are accepted).

    Raises:
        PreconditionError: If the id is unknown
    """
    key = group_id.strip().upper()
    if not key.startswith("G"):
        key = "G" + key
    entries = load_catalog()
    if key not in entries:
        raise PreconditionError(f"unknown catalog id {group_id!r}; known: {', '.join(entries)}")
    return entries[key]


@lru_cache(maxsize=None)
def discriminant_of(group_id: str) -> MultiPoly:
    """
    Discriminant of the reflection group: the determinant of its matrix of
    basic derivations.

    Raises:
        UnsupportedEntryError: If the entry has no matrix (G34)
    """
    entry = get_entry(group_id)
    matrix = entry.poly_matrix()
    started = time.time()
    det = det_bareiss(matrix)
    logger.info(
        f"Discriminant of {entry.group_id}: {len(det.terms)} terms, "
        f"computed in {time.time() - started:.2f}s"
    )
    return det


def reference_discriminant(group_id: str) -> MultiPoly:
    """The printed discriminant converted to the matrix's invariants."""
    entry = get_entry(group_id)
    if entry.reference_discriminant is None:
        raise UnsupportedEntryError(f"{entry.group_id} has no printed discriminant")
    ref = entry.reference_discriminant
    printed = parse_poly(ref.polynomial, entry.variables)
    bindings = {v: parse_poly(text, entry.variables) for v, text in ref.rescale.items()}
    return substitute(printed, bindings, entry.variables).scale(ref.scale)


def part_at_infinity(group_id: str) -> Tuple[MultiPoly, MultiPoly]:
    """(computed, recorded) homogeneous part of the discriminant of the recorded degree."""
    entry = get_entry(group_id)
    if entry.at_infinity is None:
        raise UnsupportedEntryError(f"{entry.group_id} has no recorded part at infinity")
    computed = discriminant_of(entry.group_id).homogeneous_part(entry.at_infinity.degree)
    return computed, parse_poly(entry.at_infinity.polynomial, entry.variables)


def hessian_invariant(group_id: str) -> MultiPoly:
    """det(Hessian(f_1)) divided by the recorded scale."""
    entry = get_entry(group_id)
    if entry.first_invariant is None:
        raise UnsupportedEntryError(f"{entry.group_id} has no recorded first invariant")
    f1 = parse_poly(entry.first_invariant.polynomial, entry.variables)
    return hessian_det(f1, entry.variables).scale(Fraction(1, entry.first_invariant.hessian_scale))


def _plane_bindings(bindings: Dict[str, str]) -> Dict[str, MultiPoly]:
    return {v: parse_poly(text, PLANE_VARIABLES) for v, text in bindings.items()}


def restrict(group_id: str, bindings: Dict[str, str]) -> MultiPoly:
    """Discriminant restricted to the plane given by bindings, over (x, y)."""
    entry = get_entry(group_id)
    unbound = [v for v in entry.variables if v not in bindings and v not in PLANE_VARIABLES]
    if unbound:
        raise PreconditionError(f"plane leaves variables {unbound} unbound")
    return substitute(discriminant_of(entry.group_id), _plane_bindings(bindings), PLANE_VARIABLES)


def check_plane(group_id: str, bindings: Dict[str, str], fiber: str = "x") -> PlaneCheck:
    """
    Test a restriction plane.

    The plane is accepted when the restricted curve has a nonzero constant
    leading coefficient in the fiber variable and is squarefree in it. The
    number of distinct critical values (roots of the reduced discriminant in
    the base variable) measures how generic the base line is.
    """
    curve = restrict(group_id, bindings)
    base = [v for v in PLANE_VARIABLES if v != fiber][0]
    lead = curve.leading_coefficient(fiber)
    monic = lead.is_constant() and not lead.is_zero()
    disc = discriminant(curve, fiber) if curve.degree(fiber) >= 1 else MultiPoly.constant(1, PLANE_VARIABLES)
    squarefree = not disc.is_zero()
    critical = squarefree_part(disc, base).degree(base) if squarefree and not disc.is_constant() else 0
    check = PlaneCheck(bindings=dict(bindings), monic=monic, squarefree=squarefree,
                       fiber_degree=curve.degree(fiber), critical_values=max(critical, 0))
    logger.debug(f"Plane {bindings} for {group_id}: {check}")
    return check


def candidate_planes(group_id: str, bound: int = PLANE_SEARCH_BOUND) -> Iterator[Dict[str, str]]:
    """
    Planes through the fiber direction of the highest-weight invariant.

    With the variables v1, ..., vr ordered by increasing weight: vr -> x,
    v1 -> y and every other vk -> a_k + b_k*y with 0 < |a_k|, |b_k| <= bound,
    enumerated lexicographically in (a_2, b_2, a_3, b_3, ...).

    Raises:
        UnsupportedEntryError: If the entry has no derivation matrix
    """
    entry = get_entry(group_id)
    if not entry.has_matrix:
        raise UnsupportedEntryError(f"{entry.group_id} has no discriminant to restrict")
    ordered = [v for _, v in sorted(zip(entry.weights, entry.variables))]
    low, middle, high = ordered[0], ordered[1:-1], ordered[-1]
    values = [k * sign for k in range(1, bound + 1) for sign in (1, -1)]
    for coefficients in product(values, repeat=2 * len(middle)):
        bindings = {low: "y"}
        for k, v in enumerate(middle):
            bindings[v] = f"{coefficients[2 * k]} + {coefficients[2 * k + 1]}*y"
        bindings[high] = "x"
        yield bindings


def search_plane(group_id: str, bound: int = PLANE_SEARCH_BOUND,
                 limit: int = PLANE_SEARCH_LIMIT) -> Dict[str, str]:
    """
    First accepted candidate plane with the largest number of critical values.

    Only the first `limit` candidates are checked; in rank 4 and 5 the grid
    grows as (2 * bound)^(2r - 4).

    Raises:
        UnsupportedEntryError: If no candidate is accepted
    """
    best: Optional[PlaneCheck] = None
    for bindings in islice(candidate_planes(group_id, bound), limit):
        check = check_plane(group_id, bindings)
        if check.accepted and (best is None or check.critical_values > best.critical_values):
            best = check
    if best is None:
        raise UnsupportedEntryError(f"no acceptable plane for {group_id} among {limit} candidates up to {bound}")
    logger.info(f"Plane search for {group_id}: {best.bindings} ({best.critical_values} critical values)")
    return best.bindings


@lru_cache(maxsize=None)
def _plane_curve(group_id: str) -> MultiPoly:
    entry = get_entry(group_id)
    if not entry.has_matrix:
        raise UnsupportedEntryError(f"{entry.group_id} has no derivation matrix")
    if entry.plane is None:
        logger.info(f"No recorded plane for {entry.group_id}; searching")
        return restrict(entry.group_id, search_plane(entry.group_id))
    bindings = entry.plane.bindings
    check = check_plane(entry.group_id, bindings, entry.plane.fiber)
    if not check.accepted:
        logger.warning(f"Recorded plane for {entry.group_id} rejected ({check}); searching")
        bindings = search_plane(entry.group_id)
    return restrict(entry.group_id, bindings)


def plane_curve(group_id: str) -> MultiPoly:
    """
    Bivariate curve in (x, y): the discriminant restricted to the catalog plane.

    Entries without a recorded plane get one from search_plane.

    Raises:
        UnsupportedEntryError: If the entry has no matrix or no acceptable plane
    """
    return _plane_curve(get_entry(group_id).group_id)


def format_entry(entry: CatalogEntry) -> str:
    """Catalog dump in the polynomial and presentation text formats."""
    lines = [f"# {entry.group_id}", f"variables: {' '.join(entry.variables)}",
             f"weights: {' '.join(str(w) for w in entry.weights)}", f"order: {entry.order}"]
    if entry.matrix is not None:
        matrix = entry.poly_matrix()
        lines.append(f"matrix: {matrix.size}x{matrix.size}")
        for i in range(matrix.size):
            lines.append("  [" + ", ".join(format_poly(matrix.entry(i, j)) for j in range(matrix.size)) + "]")
    if entry.plane is not None:
        lines.append("plane: " + ", ".join(f"{v} = {text}" for v, text in entry.plane.bindings.items()))
    for spec in entry.presentations:
        lines.append(f"presentation {spec.name}:")
        lines.append(format_presentation(spec.to_presentation()).rstrip("\n"))
        if spec.central is not None:
            lines.append(f"central: ({spec.central.word})^{spec.central.power}")
    return "\n".join(lines) + "\n"
