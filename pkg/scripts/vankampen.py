"""
Van Kampen Command-Line Tool

Subcommands:
    vk        polynomial -> simplified presentation of the complement
    disc      discriminant of a curve (or of a catalog group)
    curve     catalog group -> restricted plane curve
    present   braid file -> raw Van Kampen presentation
    simplify  presentation file -> Tietze-simplified presentation
    verify    presentation file -> abelianization, quotient order, centrality
    catalog   dump, run or verify a catalog group

Documents go to stdout, logs to stderr. Exit codes: 0 success,
2 precondition failure, 3 resource limit, 4 internal assertion.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import (
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_RESOURCE_LIMIT,
    MAX_COSETS,
    NEWTON_GUARD_DIGITS,
    OUTPUT_FORMAT,
    OUTPUT_FORMATS,
    RANDOM_SEED,
    SIMPLIFY_BUDGET,
    WORKER_JOBS,
)
from src.catalog import catalog
from src.groups.hurwitz import vankampen
from src.groups.presentation import format_presentation, parse_presentation
from src.groups.tietze import tietze_simplify
from src.monodromy.braid import parse_braid_file
from src.pipeline import vk_pipeline
from src.pipeline.report import (
    PipelineConfig,
    render_catalog,
    render_verification,
    render_vk,
    summary_table,
)
from src.polynomials.algebra import discriminant
from src.polynomials.multipoly import format_poly, parse_poly
from src.utils.errors import PreconditionError, VanKampenError
from src.utils.logger import logger, setup_logging


def read_input(source: str) -> str:
    """File contents, or stdin for `-`."""
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def emit(document: str) -> None:
    sys.stdout.write(document)
    sys.stdout.flush()


def overflow_code(reports) -> Optional[int]:
    """Resource-limit exit code when a coset enumeration hit its limit."""
    if any(r.overflow for r in reports):
        logger.error("Coset enumeration exceeded --max-cosets")
        return EXIT_RESOURCE_LIMIT
    return None


def build_config(args: argparse.Namespace) -> PipelineConfig:
    return PipelineConfig(
        polynomial=getattr(args, "polynomial", None),
        fiber_var=getattr(args, "fiber_var", None),
        seed=args.seed,
        guard_digits=args.guard_digits,
        max_cosets=args.max_cosets,
        simplify_budget=args.simplify_budget,
        jobs=args.jobs,
        output_format=args.format,
        emit_braids=bool(getattr(args, "emit_braids", None)),
        emit_loops=bool(getattr(args, "emit_loops", None)),
        plot_loops=getattr(args, "plot_loops", None),
    )


def write_artifacts(args: argparse.Namespace, report) -> None:
    if getattr(args, "emit_braids", None) and report.braids is not None:
        Path(args.emit_braids).write_text(report.braids)
        logger.info(f"Braids written to {args.emit_braids}")
    if getattr(args, "emit_loops", None) and report.loop_dump is not None:
        Path(args.emit_loops).write_text(report.loop_dump)
        logger.info(f"Loop dump written to {args.emit_loops}")


def cmd_vk(args: argparse.Namespace) -> None:
    config = build_config(args)
    run = vk_pipeline.run_vk_text(args.polynomial, config)
    report = run.report(config)
    write_artifacts(args, report)
    emit(report.model_dump_json(indent=2) + "\n" if args.format == "json" else render_vk(report))


def cmd_disc(args: argparse.Namespace) -> None:
    if args.catalog:
        disc = catalog.discriminant_of(args.catalog)
    else:
        if not args.polynomial:
            raise PreconditionError("disc needs a polynomial or --catalog ID")
        curve = parse_poly(args.polynomial)
        fiber, _ = vk_pipeline.choose_fiber_variable(curve, args.fiber_var)
        disc = discriminant(curve, fiber)
    text = format_poly(disc)
    emit(json.dumps({"discriminant": text}, indent=2) + "\n" if args.format == "json" else text + "\n")


def cmd_curve(args: argparse.Namespace) -> None:
    text = format_poly(catalog.plane_curve(args.group_id))
    emit(json.dumps({"group_id": args.group_id, "curve": text}, indent=2) + "\n"
         if args.format == "json" else text + "\n")


def cmd_present(args: argparse.Namespace) -> None:
    strands, braids = parse_braid_file(read_input(args.braids))
    text = format_presentation(vankampen(strands, braids))
    emit(json.dumps({"presentation": text}, indent=2) + "\n" if args.format == "json" else text)


def cmd_simplify(args: argparse.Namespace) -> None:
    p = parse_presentation(read_input(args.presentation))
    text = format_presentation(tietze_simplify(p, seed=args.seed, budget=args.simplify_budget))
    emit(json.dumps({"presentation": text}, indent=2) + "\n" if args.format == "json" else text)


def cmd_verify(args: argparse.Namespace) -> Optional[int]:
    report = vk_pipeline.verify_presentation_text(
        read_input(args.presentation), quadratic=not args.no_quadratic, central=args.central,
        expected_order=args.expected_order, max_cosets=args.max_cosets,
    )
    emit(report.model_dump_json(indent=2) + "\n" if args.format == "json" else render_verification(report))
    return overflow_code([report])


def cmd_catalog(args: argparse.Namespace) -> Optional[int]:
    if args.run:
        report = vk_pipeline.run_catalog(args.group_id, build_config(args))
        emit(report.model_dump_json(indent=2) + "\n" if args.format == "json" else render_catalog(report))
        return overflow_code([report.computed, report.target])
    elif args.verify:
        reports = vk_pipeline.verify_catalog_entry(args.group_id, args.max_cosets)
        if args.format == "json":
            emit(json.dumps([r.model_dump() for r in reports], indent=2) + "\n")
        else:
            emit(summary_table(reports).to_string(index=False) + "\n")
        return overflow_code(reports)
    else:
        entry = catalog.get_entry(args.group_id)
        emit(entry.model_dump_json(indent=2) + "\n" if args.format == "json" else catalog.format_entry(entry))
    return None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=RANDOM_SEED)
    common.add_argument("--guard-digits", type=int, default=NEWTON_GUARD_DIGITS)
    common.add_argument("--max-cosets", type=int, default=MAX_COSETS)
    common.add_argument("--simplify-budget", type=int, default=SIMPLIFY_BUDGET)
    common.add_argument("--jobs", type=int, default=WORKER_JOBS)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=OUTPUT_FORMAT)
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="console log level")

    parser = argparse.ArgumentParser(description="Fundamental groups of plane curve complements")
    sub = parser.add_subparsers(dest="command", required=True)

    vk = sub.add_parser("vk", parents=[common], help="presentation of a curve complement")
    vk.add_argument("polynomial")
    vk.add_argument("--fiber-var")
    vk.add_argument("--emit-braids", metavar="PATH", help="write the loop braids to a braid file")
    vk.add_argument("--emit-loops", metavar="PATH", help="write the loop system dump")
    vk.add_argument("--plot-loops", metavar="PATH", help="render the loop system with matplotlib")
    vk.set_defaults(handler=cmd_vk)

    disc = sub.add_parser("disc", parents=[common], help="discriminant in the fiber variable")
    disc.add_argument("polynomial", nargs="?")
    disc.add_argument("--fiber-var")
    disc.add_argument("--catalog", metavar="ID", help="discriminant of a catalog group instead")
    disc.set_defaults(handler=cmd_disc)

    curve = sub.add_parser("curve", parents=[common], help="plane curve of a catalog group")
    curve.add_argument("group_id")
    curve.set_defaults(handler=cmd_curve)

    present = sub.add_parser("present", parents=[common], help="presentation from a braid file")
    present.add_argument("braids", help="braid file, or - for stdin")
    present.set_defaults(handler=cmd_present)

    simplify = sub.add_parser("simplify", parents=[common], help="Tietze-simplify a presentation")
    simplify.add_argument("presentation", help="presentation file, or - for stdin")
    simplify.set_defaults(handler=cmd_simplify)

    verify = sub.add_parser("verify", parents=[common], help="verify a presentation")
    verify.add_argument("presentation", help="presentation file, or - for stdin")
    verify.add_argument("--no-quadratic", action="store_true", help="skip the quadratic quotient")
    verify.add_argument("--central", metavar="WORD^K", help="word whose image should be central")
    verify.add_argument("--expected-order", type=int)
    verify.set_defaults(handler=cmd_verify)

    cat = sub.add_parser("catalog", parents=[common], help="catalog data, runs and verification")
    cat.add_argument("group_id")
    mode = cat.add_mutually_exclusive_group()
    mode.add_argument("--run", action="store_true", help="run the pipeline on the catalog curve")
    mode.add_argument("--verify", action="store_true", help="verify the recorded presentations")
    cat.add_argument("--fiber-var")
    cat.set_defaults(handler=cmd_catalog)
    return parser


def main(argv=None) -> int:
    """Parse arguments and dispatch; returns the exit code."""
    args = build_parser().parse_args(argv)
    if args.log_level:
        setup_logging(args.log_level)
    logger.info("=" * 60)
    logger.info(f"VANKAMPEN {args.command.upper()}")
    logger.info("=" * 60)
    try:
        code = args.handler(args)
    except VanKampenError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        return EXIT_PRECONDITION
    except Exception as e:
        logger.exception(f"Internal error: {e}")
        return EXIT_INTERNAL
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
