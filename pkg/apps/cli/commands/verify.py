"""``verify``: check a formula document; exit 0 if it is a formula, 3 if not."""
import argparse

import structlog

from apps.cli.codec import field_to_doc, formula_from_doc, read_doc, type_to_doc, write_doc
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.options import add_output_argument
from apps.cli.schemas import FormulaDoc, VerificationDoc
from packages.core.sos import reduce_formula_mod_p, verify_formula

logger = structlog.get_logger()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Check that a formula document is a formula")
    parser.add_argument("--formula", required=True, help="Formula document")
    parser.add_argument("--p", type=int, help="Reduce a rational formula mod p first")
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    formula = formula_from_doc(read_doc(args.formula, FormulaDoc))
    if args.p is not None:
        formula = reduce_formula_mod_p(formula, args.p)
    passed = verify_formula(formula)
    write_doc(
        VerificationDoc(
            type=type_to_doc(formula.type), field=field_to_doc(formula.field), passed=passed
        ),
        args.out,
    )
    logger.info(
        "cli.verify.done", type=str(formula.type), field=formula.field.label(), passed=passed
    )
    return ExitCode.OK if passed else ExitCode.NEGATIVE
