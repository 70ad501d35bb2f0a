"""``zeta``: recover the zeta function of an ideal's variety from point counts."""
import argparse

import structlog

from apps.cli.codec import (
    counts_from_doc,
    counts_to_doc,
    ideal_from_doc,
    read_doc,
    write_doc,
    zeta_to_doc,
)
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.options import add_output_argument
from apps.cli.schemas import CountsDoc, IdealDoc
from packages.core.fields import PrimeField
from packages.core.zeta import zeta_from_counts, zeta_of_system

logger = structlog.get_logger()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("zeta", help="Reconstruct a zeta function from point counts")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="Ideal document; points are counted over F_{p^k}")
    source.add_argument("--counts", help="Counts document with N_1, N_2, ...")
    parser.add_argument("--p", type=int, help="Prime to count over (with --input)")
    parser.add_argument("--kmax", type=int, help="Count over F_{p^k}, k = 1..kmax (with --input)")
    parser.add_argument("--d1", type=int, required=True, help="Degree bound of the numerator")
    parser.add_argument("--d2", type=int, required=True, help="Degree bound of the denominator")
    parser.add_argument(
        "--no-cancel", action="store_true", help="Keep common factors of numerator and denominator"
    )
    parser.add_argument("--count-budget", dest="count_budget", type=int)
    parser.add_argument("--save-counts", help="Also write the counts document here")
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    if args.d1 < 0 or args.d2 < 0:
        raise ValueError("--d1 and --d2 must be >= 0")
    cancel = not args.no_cancel

    if args.counts:
        doc = read_doc(args.counts, CountsDoc)
        report = zeta_from_counts(
            counts_from_doc(doc),
            args.d1,
            args.d2,
            degree=doc.degree or 1,
            equations=doc.equations or 1,
            cancel_common=cancel,
        )
    else:
        if args.p is None or args.kmax is None:
            raise ValueError("--input needs --p and --kmax")
        ring, generators, _ = ideal_from_doc(read_doc(args.input, IdealDoc))
        field = PrimeField(args.p)
        if ring.field != field:
            generators = [g.change_field(field) for g in generators]
        report = zeta_of_system(
            generators,
            args.kmax,
            args.d1,
            args.d2,
            budget=settings.count_budget,
            threads=settings.threads,
            cancel_common=cancel,
        )
        if args.save_counts:
            degree = max(g.total_degree() for g in generators)
            write_doc(
                counts_to_doc(report.counts, max(degree, 1), len(generators)), args.save_counts
            )

    write_doc(zeta_to_doc(report), args.out)
    logger.info(
        "cli.zeta.done",
        p=report.counts.p,
        degrees=list(report.zeta.degrees),
        within_bombieri=report.within_bombieri,
    )
    return ExitCode.OK
