"""
Test the complete pipeline
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.groups.abelian import abelianization
from src.groups.coset_enumeration import group_order
from src.groups.matching import presentations_match
from src.groups.presentation import parse_presentation, with_quadratic_relators
from src.pipeline.report import PipelineConfig
from src.pipeline.vk_pipeline import run_vk_text
from loguru import logger


def test_pipeline():
    """Run the trefoil curve x^2 - y^3 through every stage"""
    logger.info("=" * 60)
    logger.info("TESTING COMPLETE PIPELINE")
    logger.info("=" * 60)

    config = PipelineConfig(seed=7, spot_checks=4, emit_braids=True, emit_loops=True)
    run = run_vk_text("x^2 - y^3", config)

    logger.info("\n[1/4] Discriminant and loops...")
    assert run.fiber_var == "x"
    assert run.strands == 2
    assert len(run.sites) == 1
    assert len(run.braids) == 1
    logger.info(f"✓ {len(run.sites)} critical value, {len(run.braids)} loop")

    logger.info("\n[2/4] Monodromy...")
    braid = run.braids[0]
    assert sum(1 if letter > 0 else -1 for letter in braid.letters) in (3, -3)
    logger.info(f"✓ Loop braid: {braid}")

    logger.info("\n[3/4] Presentation...")
    p = run.presentation
    assert p.rank == 2
    assert [len(r) for r in p.relators] == [6]
    trefoil = parse_presentation("gens: a b\naba = bab\n")
    assert presentations_match(p, trefoil)
    logger.info(f"✓ {p.format_word(p.relators[0])}")

    logger.info("\n[4/4] Invariants...")
    assert abelianization(p) == ((), 1)
    assert group_order(with_quadratic_relators(p)) == 6
    report = run.report(config)
    assert report.braids.startswith("strings: 2")
    assert sum(1 for line in report.loop_dump.splitlines() if line.startswith("L ")) == 1
    logger.info("✓ Quadratic quotient is S3")

    logger.info("\n" + "=" * 60)
    logger.info("PIPELINE TEST COMPLETE")
    logger.info("=" * 60)


if __name__ == "__main__":
    test_pipeline()
