"""
Pipeline Reports

Pydantic models for the machine-readable output of the pipeline and the
verification commands, plus text rendering and the pandas summary table.
"""
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel

from config.settings import MAX_COSETS, NEWTON_GUARD_DIGITS, OUTPUT_FORMAT, RANDOM_SEED, \
    SAFETY_SPOT_CHECKS, SIMPLIFY_BUDGET, WORKER_JOBS


class PipelineConfig(BaseModel):
    """Everything that determines a run; a fixed seed makes the run deterministic."""

    polynomial: Optional[str] = None
    catalog_id: Optional[str] = None
    fiber_var: Optional[str] = None
    seed: int = RANDOM_SEED
    guard_digits: int = NEWTON_GUARD_DIGITS
    max_cosets: int = MAX_COSETS
    simplify_budget: int = SIMPLIFY_BUDGET
    jobs: int = WORKER_JOBS
    spot_checks: int = SAFETY_SPOT_CHECKS
    output_format: str = OUTPUT_FORMAT
    emit_braids: bool = False
    emit_loops: bool = False
    plot_loops: Optional[str] = None


class VerificationReport(BaseModel):
    """Invariants of one presentation."""

    label: str
    generators: List[str]
    relators: int
    total_length: int
    abelianization: str
    quadratic: bool
    order: Optional[int] = None
    overflow: bool = False
    expected_order: Optional[int] = None
    central_word: Optional[str] = None
    central: Optional[bool] = None

    @property
    def order_matches(self) -> Optional[bool]:
        if self.expected_order is None or self.order is None:
            return None
        return self.order == self.expected_order


class VKReport(BaseModel):
    """Result of the Van Kampen pipeline on one curve."""

    curve: str
    fiber_var: str
    base_var: str
    strands: int
    critical_values: int
    loops: int
    raw_relators: int
    presentation: str
    braids: Optional[str] = None
    loop_dump: Optional[str] = None


class CatalogReport(BaseModel):
    """Run of the pipeline on a catalog curve plus invariant-level comparison."""

    group_id: str
    run: VKReport
    computed: VerificationReport
    target: VerificationReport
    matches_target: bool


def render_verification(report: VerificationReport) -> str:
    lines = [
        f"presentation: {report.label}",
        f"generators: {' '.join(report.generators)}",
        f"relators: {report.relators} (total length {report.total_length})",
        f"abelianization: {report.abelianization}",
    ]
    if report.quadratic:
        if report.overflow:
            lines.append("quadratic quotient: coset limit exceeded")
        else:
            lines.append(f"quadratic quotient order: {report.order}")
        if report.expected_order is not None:
            lines.append(f"expected order: {report.expected_order}")
    if report.central_word is not None:
        status = "not checked" if report.central is None else ("central" if report.central else "NOT central")
        lines.append(f"{report.central_word}: {status}")
    return "\n".join(lines) + "\n"


def render_vk(report: VKReport) -> str:
    lines = [
        f"# curve: {report.curve}",
        f"# fiber variable {report.fiber_var}, base variable {report.base_var}",
        f"# {report.strands} strings, {report.critical_values} critical values, {report.loops} loops",
        report.presentation.rstrip("\n"),
    ]
    return "\n".join(lines) + "\n"


def render_catalog(report: CatalogReport) -> str:
    parts = [
        render_vk(report.run),
        "## computed\n" + render_verification(report.computed),
        "## target\n" + render_verification(report.target),
        f"matches target presentation: {'yes' if report.matches_target else 'no'}\n",
    ]
    return "\n".join(parts)


def summary_table(reports: List[VerificationReport]) -> pd.DataFrame:
    """One row per verified presentation."""
    rows = [
        {
            "presentation": r.label,
            "order": r.order if not r.overflow else "overflow",
            "expected": r.expected_order,
            "abelianization": r.abelianization,
            "central": r.central,
            "ok": r.order_matches,
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=["presentation", "order", "expected", "abelianization", "central", "ok"])
