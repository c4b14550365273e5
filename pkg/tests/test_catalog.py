"""
Tests for the reflection group catalog: discriminants, invariants and planes
"""
from fractions import Fraction

import pytest

from src.catalog import catalog
from src.polynomials.algebra import weighted_degree
from src.polynomials.multipoly import parse_poly
from src.utils.errors import PreconditionError, UnsupportedEntryError

XYZ = ("x", "y", "z")


def test_catalog_ids():
    assert catalog.catalog_ids() == ["G24", "G27", "G29", "G31", "G33", "G34"]


def test_get_entry_accepts_short_ids():
    assert catalog.get_entry("g24").group_id == "G24"
    assert catalog.get_entry("24").group_id == "G24"
    assert catalog.get_entry("G33").order == 51840
    with pytest.raises(PreconditionError):
        catalog.get_entry("G25")


def test_g34_has_presentation_only():
    entry = catalog.get_entry("G34")
    assert not entry.enumerable
    assert not entry.has_matrix
    with pytest.raises(UnsupportedEntryError):
        catalog.discriminant_of("G34")
    assert entry.presentation().rank == 6


def test_g24_discriminant_matches_printed_form():
    computed = catalog.discriminant_of("G24")
    assert computed == catalog.reference_discriminant("G24")
    assert computed.terms[(0, 0, 3)] == 196
    assert computed.terms[(9, 1, 0)] == -196


@pytest.mark.parametrize("group_id, degree", [("G24", 42), ("G27", 90)])
def test_discriminant_weighted_degree(group_id, degree):
    entry = catalog.get_entry(group_id)
    assert weighted_degree(catalog.discriminant_of(group_id), entry.weight_map()) == degree


@pytest.mark.slow
@pytest.mark.parametrize("group_id, degree", [("G29", 80), ("G31", 120), ("G33", 90)])
def test_discriminant_weighted_degree_rank_four_and_five(group_id, degree):
    entry = catalog.get_entry(group_id)
    assert weighted_degree(catalog.discriminant_of(group_id), entry.weight_map()) == degree


@pytest.mark.slow
def test_g31_part_at_infinity():
    computed, recorded = catalog.part_at_infinity("G31")
    assert computed == recorded
    assert recorded == parse_poly("-4/27*x^7*z^2*t - 8/81*x^6*y*z^3", ("x", "y", "z", "t"))


def test_hessian_invariants():
    h24 = catalog.hessian_invariant("G24")
    assert h24 == parse_poly("5/2*x^2*y^2*z^2 - 1/2*x*y^5 - 1/2*x^5*z - 1/2*y*z^5", XYZ)
    h27 = catalog.hessian_invariant("G27")
    assert not h27.is_zero()
    assert weighted_degree(h27, (1, 1, 1)) == catalog.get_entry("G27").first_invariant.hessian_degree


def test_hessian_invariant_missing():
    with pytest.raises(UnsupportedEntryError):
        catalog.hessian_invariant("G29")


def test_recorded_g24_plane_is_accepted():
    entry = catalog.get_entry("G24")
    check = catalog.check_plane("G24", entry.plane.bindings)
    assert check.accepted
    assert check.fiber_degree == 3
    assert check.critical_values > 0


def test_plane_curve_is_monic_in_fiber():
    curve = catalog.plane_curve("G24")
    assert curve.variables == ("x", "y")
    assert curve.leading_coefficient("x").is_constant()


def test_restrict_requires_all_variables_bound():
    with pytest.raises(PreconditionError):
        catalog.restrict("G24", {"x": "y"})


def test_candidate_planes():
    planes = list(catalog.candidate_planes("G24", bound=1))
    assert len(planes) == 4
    assert planes[0] == {"x": "y", "y": "1 + 1*y", "z": "x"}
    with pytest.raises(UnsupportedEntryError):
        list(catalog.candidate_planes("G34"))


def test_candidate_planes_in_higher_rank():
    planes = list(catalog.candidate_planes("G29", bound=1))
    assert len(planes) == 16
    assert planes[0] == {"x": "y", "y": "1 + 1*y", "z": "1 + 1*y", "t": "x"}
    assert planes[1]["z"] == "1 + -1*y"
    assert len(list(catalog.candidate_planes("G33", bound=1))) == 64
    assert all(p["u"] == "x" for p in catalog.candidate_planes("G33", bound=1))


def test_presentation_specs():
    spec = catalog.get_entry("G24").presentation_spec()
    assert spec.central_word() == (1, 2, 3) * 7
    assert catalog.get_entry("G24").presentation().rank == 3
    with pytest.raises(PreconditionError):
        catalog.get_entry("G24").presentation_spec("missing")


def test_redundant_link_is_dropped():
    spec = catalog.get_entry("G33").presentation_spec()
    full = spec.to_presentation()
    reduced = spec.to_presentation(drop_redundant=True)
    assert len(reduced.relators) == len(full.relators) - 1


def test_matrix_prefactor():
    entry = catalog.get_entry("G29")
    matrix = entry.poly_matrix()
    assert matrix.entry(0, 0) == parse_poly("4*x", ("x", "y", "z", "t"))


def test_format_entry():
    text = catalog.format_entry(catalog.get_entry("G24"))
    assert text.startswith("# G24\n")
    assert "order: 336" in text
    assert "presentation primary:" in text
    assert "central: (stu)^7" in text


@pytest.mark.slow
def test_g31_plane_curve_anchors():
    entry = catalog.get_entry("G31")
    curve = catalog.restrict("G31", entry.plane.bindings)
    assert curve.variables == ("x", "y")
    assert curve.constant_term() == 746496
    assert curve.terms[(9, 0)] == Fraction(4, 81)


@pytest.mark.slow
def test_search_plane_prefers_most_critical_values():
    best = catalog.search_plane("G24", bound=2)
    checks = [catalog.check_plane("G24", b) for b in catalog.candidate_planes("G24", bound=2)]
    accepted = [c for c in checks if c.accepted]
    assert catalog.check_plane("G24", best).accepted
    assert best == next(c.bindings for c in accepted
                        if c.critical_values == max(a.critical_values for a in accepted))


@pytest.mark.slow
def test_g29_plane_is_searched():
    bindings = catalog.search_plane("G29", bound=1, limit=4)
    assert catalog.check_plane("G29", bindings).accepted
    curve = catalog.restrict("G29", bindings)
    assert curve.variables == ("x", "y")
    assert curve.leading_coefficient("x").is_constant()
