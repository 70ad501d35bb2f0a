"""``search``: look for explicit formulas over F_{p^k}, or up the tower F_p, F_{p^2}, ..."""
import argparse

import structlog

from apps.cli.codec import outcome_to_doc, tower_to_doc, write_doc
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.options import add_output_argument, add_type_arguments, type_from_args
from packages.core.fields import finite_field
from packages.core.search import (
    EmitMode,
    SearchConfig,
    SearchStatus,
    SearchStrategy,
    run_search,
    search_tower,
)

logger = structlog.get_logger()

_STATUS_EXIT = {
    SearchStatus.FOUND: ExitCode.OK,
    SearchStatus.EXHAUSTED_NONE: ExitCode.NEGATIVE,
    SearchStatus.BUDGET_EXCEEDED: ExitCode.UNDECIDED,
}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("search", help="Search a finite field for explicit formulas")
    add_type_arguments(parser)
    parser.add_argument("--p", type=int, required=True, help="Odd prime characteristic")
    parser.add_argument("--k", type=int, default=1, help="Search F_{p^k}")
    parser.add_argument(
        "--kmax", type=int, help="Search F_{p^k} for k = 1..kmax, stopping at the first hit"
    )
    parser.add_argument(
        "--strategy",
        choices=[s.value for s in SearchStrategy],
        default=SearchStrategy.BACKTRACKING.value,
    )
    parser.add_argument(
        "--emit", choices=[e.value for e in EmitMode], default=EmitMode.FIRST.value
    )
    parser.add_argument("--node-budget", dest="search_node_budget", type=int)
    parser.add_argument("--time-budget", dest="search_time_budget", type=float)
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    t = type_from_args(args)
    strategy = SearchStrategy(args.strategy)

    if args.kmax is not None:
        tower = search_tower(
            t,
            args.p,
            args.kmax,
            strategy=strategy,
            node_budget=settings.search_node_budget,
            threads=settings.threads,
        )
        write_doc(tower_to_doc(tower), args.out)
        logger.info("cli.search.tower_done", type=str(t), p=args.p, first_k=tower.first_k)
        if tower.first_k is not None:
            return ExitCode.OK
        if all(o.status is SearchStatus.EXHAUSTED_NONE for _, o in tower.outcomes):
            return ExitCode.NEGATIVE
        return ExitCode.UNDECIDED

    field = finite_field(args.p, args.k)
    cfg = SearchConfig(
        type=t,
        field=field,
        strategy=strategy,
        emit=EmitMode(args.emit),
        node_budget=settings.search_node_budget,
        time_budget=settings.search_time_budget,
        threads=settings.threads,
    )
    outcome = run_search(cfg)
    write_doc(outcome_to_doc(outcome, field, cfg.emit), args.out)
    logger.info(
        "cli.search.done",
        type=str(t),
        field=field.label(),
        status=outcome.status.value,
        count=outcome.count,
        nodes=outcome.nodes,
    )
    return _STATUS_EXIT[outcome.status]
