"""``catalog``: write a classical n-square formula (n = 1, 2, 4, 8), optionally restricted."""
import argparse

import structlog

from apps.cli.codec import formula_to_doc, write_doc
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.options import add_field_arguments, add_output_argument, field_from_args
from packages.core.sos import catalog, restrict_formula

logger = structlog.get_logger()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("catalog", help="Write a classical formula of type [n,n,n]")
    parser.add_argument("--n", type=int, required=True, help="1, 2, 4 or 8")
    add_field_arguments(parser, extensions=True)
    parser.add_argument("--r", type=int, help="Keep the first r x-variables")
    parser.add_argument("--s", type=int, help="Keep the first s y-variables")
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    formula = catalog(args.n, field_from_args(args))
    if args.r is not None or args.s is not None:
        formula = restrict_formula(formula, args.r or args.n, args.s or args.n)
    write_doc(formula_to_doc(formula), args.out)
    logger.info("cli.catalog.written", type=str(formula.type), field=formula.field.label())
    return ExitCode.OK
