"""``bounds``: evaluate the degree, step, characteristic and field-degree bounds for a type."""
import argparse

import structlog

from apps.cli.codec import (
    bound_to_doc,
    observed_to_doc,
    read_doc,
    read_typed_doc,
    trace_from_doc,
    type_from_doc,
    type_to_doc,
    write_doc,
)
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.options import add_output_argument, add_type_arguments, type_from_args
from apps.cli.schemas import BoundReportDoc, TraceDoc
from packages.core.bounds import (
    BoundMode,
    BoundParams,
    bombieri_bound,
    bound_from_magnitude,
    buchberger_step_bound,
    charp_threshold,
    dube_bound,
    field_degree_bound,
    observed_vs_bound,
)

logger = structlog.get_logger()

# The defining ideal is generated in degree 2.
GENERATOR_DEGREE = 2


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bounds", help="Evaluate the explicit bounds for a type")
    add_type_arguments(parser, required=False)
    parser.add_argument(
        "--input", help="Ideal, groebner or trace document to take the type from"
    )
    parser.add_argument(
        "--mode", dest="bound_mode", choices=[m.value for m in BoundMode], default=None
    )
    parser.add_argument("--q", type=int, help="Override the growth parameter q")
    parser.add_argument("--trace", help="Trace document to compare against the growth bound")
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    t = type_from_args(args)
    trace_doc = read_doc(args.trace, TraceDoc) if args.trace else None
    if t is None and args.input:
        t = type_from_doc(read_typed_doc(args.input).type)
    if t is None and trace_doc is not None:
        t = type_from_doc(trace_doc.type)
    if t is None:
        raise ValueError("give --r/--s/--n, or an --input or --trace document naming a type")

    cap = settings.bit_cap
    params = BoundParams.for_type(
        t, mode=BoundMode(settings.bound_mode), forced_q=args.q, bit_cap=cap
    )
    observed = None
    if trace_doc is not None:
        observed = observed_vs_bound(trace_from_doc(trace_doc), params.q, cap)

    report = BoundReportDoc(
        type=type_to_doc(t),
        mode=params.mode.value,
        bit_cap=cap,
        variables=params.v,
        exponent=params.e,
        degree=bound_to_doc(bound_from_magnitude(params.degree, cap)),
        q=bound_to_doc(bound_from_magnitude(params.q, cap)),
        dube=bound_to_doc(dube_bound(GENERATOR_DEGREE, params.v, cap)),
        step_bound=bound_to_doc(buchberger_step_bound(params)),
        charp_threshold=bound_to_doc(charp_threshold(params)),
        field_degree=bound_to_doc(field_degree_bound(t, cap)),
        bombieri=str(bombieri_bound(GENERATOR_DEGREE, params.v, t.generator_count())),
        observed=[observed_to_doc(row) for row in observed] if observed is not None else None,
    )
    write_doc(report, args.out)
    logger.info("cli.bounds.done", type=str(t), mode=params.mode.value, bit_cap=cap)

    if observed is not None and not all(row.within for row in observed):
        violated = [row.step for row in observed if not row.within]
        logger.error("cli.bounds.violated", type=str(t), steps=violated)
        return ExitCode.INCONSISTENT
    return ExitCode.OK
