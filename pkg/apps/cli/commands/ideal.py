"""``ideal``: write the defining ideal of a formula type."""
import argparse

import structlog

from apps.cli.codec import ideal_to_doc, write_doc
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.options import (
    add_field_arguments,
    add_output_argument,
    add_type_arguments,
    field_from_args,
    type_from_args,
)
from packages.core.sos import gen_sos_ideal

logger = structlog.get_logger()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("ideal", help="Write the ideal whose zeros are the formulas")
    add_type_arguments(parser)
    add_field_arguments(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    t = type_from_args(args)
    spec = gen_sos_ideal(t, field_from_args(args))
    write_doc(ideal_to_doc(spec.ring, spec.generators, t), args.out)
    logger.info(
        "cli.ideal.written",
        type=str(t),
        field=spec.ring.field.label(),
        variables=spec.ring.nvars,
        generators=len(spec.generators),
    )
    return ExitCode.OK
