"""``groebner``: Buchberger on an ideal document; exit 0 if proper, 3 for the unit ideal."""
import argparse

import structlog

from apps.cli.codec import (
    field_to_doc,
    ideal_from_doc,
    poly_to_doc,
    read_doc,
    trace_to_doc,
    type_to_doc,
    write_doc,
)
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.options import add_field_arguments, add_output_argument, field_from_args
from apps.cli.schemas import GroebnerDoc, IdealDoc
from packages.core.fields import RationalField
from packages.core.groebner import agrees_mod_p, buchberger

logger = structlog.get_logger()


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("groebner", help="Compute a Groebner basis and its trace")
    parser.add_argument("--input", required=True, help="Ideal document")
    add_field_arguments(parser, default=None)
    parser.add_argument("--trace", help="Write the coefficient-growth trace here")
    parser.add_argument("--max-steps", dest="groebner_max_steps", type=int)
    parser.add_argument("--max-pairs", dest="groebner_max_pairs", type=int)
    parser.add_argument("--product-criterion", action="store_true", default=None)
    parser.add_argument("--interreduce", action="store_true", default=None)
    parser.add_argument(
        "--stop-on-unit", action="store_true", help="Stop as soon as a constant appears"
    )
    parser.add_argument(
        "--compare-p", type=int, help="Also decide properness mod this prime and compare"
    )
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    ring, generators, t = ideal_from_doc(read_doc(args.input, IdealDoc))
    target = field_from_args(args)
    if target is not None and target != ring.field:
        generators = [g.change_field(target) for g in generators]
        ring = ring.with_field(target)

    options = dict(
        max_steps=settings.groebner_max_steps,
        max_pairs=settings.groebner_max_pairs,
        product_criterion=settings.product_criterion,
    )
    result = buchberger(
        generators,
        interreduce=settings.interreduce,
        stop_on_unit=args.stop_on_unit,
        **options,
    )

    agrees = None
    if args.compare_p is not None:
        if not isinstance(ring.field, RationalField):
            raise ValueError("--compare-p needs an ideal over Q")
        agrees = agrees_mod_p(generators, args.compare_p, **options)

    doc = GroebnerDoc(
        type=type_to_doc(t),
        field=field_to_doc(ring.field),
        variables=list(ring.names),
        proper=result.is_proper,
        stopped_on_unit=result.stopped_on_unit,
        extensions=result.trace.extensions,
        basis=[poly_to_doc(g) for g in result.basis],
        agrees_mod_p=agrees,
    )
    write_doc(doc, args.out)
    if args.trace:
        write_doc(trace_to_doc(result.trace, t), args.trace)

    logger.info(
        "cli.groebner.done",
        field=ring.field.label(),
        proper=result.is_proper,
        basis_size=len(result.basis),
        extensions=result.trace.extensions,
        agrees_mod_p=agrees,
    )
    return ExitCode.OK if result.is_proper else ExitCode.NEGATIVE
