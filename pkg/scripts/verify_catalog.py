"""
Verify Catalog Presentations

Runs every recorded braid group presentation through abelianization,
quadratic-quotient enumeration and the centrality check, then prints a
summary table.
"""
import argparse
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pandas as pd

from config.settings import EXIT_INTERNAL, EXIT_OK, EXIT_RESOURCE_LIMIT, MAX_COSETS, OUTPUT_DIR
from src.catalog.catalog import catalog_ids
from src.pipeline.report import summary_table
from src.pipeline.vk_pipeline import verify_catalog_entry
from src.utils.errors import VanKampenError
from src.utils.logger import logger


def main(argv=None) -> int:
    """Verify the catalog presentations"""
    parser = argparse.ArgumentParser(description="Verify the catalog presentations")
    parser.add_argument("groups", nargs="*", help="catalog ids (default: all)")
    parser.add_argument("--max-cosets", type=int, default=MAX_COSETS)
    parser.add_argument("--csv", action="store_true", help=f"also save the table under {OUTPUT_DIR}")
    args = parser.parse_args(argv)

    logger.info("=" * 60)
    logger.info("VERIFYING CATALOG PRESENTATIONS")
    logger.info("=" * 60)

    try:
        groups = args.groups or catalog_ids()
        reports = []
        for step, group_id in enumerate(groups, start=1):
            logger.info(f"Step {step}/{len(groups)}: {group_id}")
            reports.extend(verify_catalog_entry(group_id, args.max_cosets))

        table = summary_table(reports)
        with pd.option_context("display.width", 120):
            print(table.to_string(index=False))

        if args.csv:
            path = OUTPUT_DIR / "catalog_verification.csv"
            table.to_csv(path, index=False)
            logger.info(f"Summary saved to {path}")

        failures = table[table["ok"] == False]  # noqa: E712
        logger.info("\n" + "=" * 60)
        logger.info(f"VERIFIED {len(table)} PRESENTATIONS, {len(failures)} MISMATCHES")
        logger.info("=" * 60)
        if not failures.empty:
            return EXIT_INTERNAL
        return EXIT_RESOURCE_LIMIT if any(r.overflow for r in reports) else EXIT_OK

    except VanKampenError as e:
        logger.error(f"Error verifying catalog: {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
