"""Backtracking search placing one coefficient vector at a time."""
import asyncio
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from packages.core.errors import VerificationMismatchError
from packages.core.search.constraints import Position, Vector, placement_ok, positions, unit_vectors
from packages.core.search.naive import search_naive
from packages.core.search.schemas import (
    EmitMode,
    SearchConfig,
    SearchOutcome,
    SearchStrategy,
    decide_status,
)
from packages.core.sos.formula import SosFormula, verify_formula

logger = structlog.get_logger()

TIME_CHECK_INTERVAL = 1024


@dataclass
class BranchResult:
    """Plain-data result of one walk; formulas are tuples of candidate indices."""

    count: int = 0
    hits: List[Tuple[int, ...]] = field(default_factory=list)
    nodes: int = 0
    exhausted: bool = True
    found_first: bool = False


class _Walker:
    def __init__(self, cfg: SearchConfig, candidates: List[Vector]):
        self.cfg = cfg
        self.candidates = candidates
        self.order = positions(cfg.type)
        self.result = BranchResult()
        self.started = time.monotonic()
        self._stop = False

    def _out_of_budget(self) -> bool:
        result = self.result
        if result.nodes >= self.cfg.node_budget:
            return True
        if self.cfg.time_budget is not None and result.nodes % TIME_CHECK_INTERVAL == 0:
            return time.monotonic() - self.started > self.cfg.time_budget
        return False

    def walk(self, first_choices: Sequence[int]) -> BranchResult:
        self._place(0, {}, [], first_choices)
        return self.result

    def _place(
        self,
        depth: int,
        placed: Dict[Position, Vector],
        chosen: List[int],
        choices: Sequence[int],
    ) -> None:
        if depth == len(self.order):
            self._record(chosen)
            return
        position = self.order[depth]
        for index in choices:
            if self._stop:
                return
            if self._out_of_budget():
                self.result.exhausted = False
                self._stop = True
                return
            self.result.nodes += 1
            v = self.candidates[index]
            if not placement_ok(placed, position, v):
                continue
            placed[position] = v
            chosen.append(index)
            self._place(depth + 1, placed, chosen, range(len(self.candidates)))
            chosen.pop()
            del placed[position]

    def _record(self, chosen: List[int]) -> None:
        self.result.count += 1
        if self.cfg.emit is EmitMode.COUNT:
            return
        self.result.hits.append(tuple(chosen))
        if self.cfg.emit is EmitMode.FIRST:
            self.result.found_first = True
            self._stop = True


def _formula_from_hit(cfg: SearchConfig, candidates: List[Vector], hit: Tuple[int, ...]) -> SosFormula:
    t = cfg.type
    vectors = dict(zip(positions(t), (candidates[index] for index in hit)))
    alpha = tuple(
        tuple(tuple(vectors[(j, k)][i] for k in range(t.s)) for j in range(t.r))
        for i in range(t.n)
    )
    return SosFormula(type=t, field=cfg.field, alpha=alpha)


def budget_shares(budget: int, branches: int) -> List[int]:
    """Split a node budget over root branches, earlier branches taking the remainder."""
    base, extra = divmod(budget, branches)
    return [base + (1 if index < extra else 0) for index in range(branches)]


def _walk_branch(
    cfg: SearchConfig,
    first_index: int,
    share: int,
    candidates: Optional[List[Vector]] = None,
) -> BranchResult:
    # In a worker process the candidate list is rebuilt deterministically.
    if share == 0:
        return BranchResult(exhausted=False)
    if candidates is None:
        candidates = unit_vectors(cfg.field, cfg.type.n)
    return _Walker(cfg.model_copy(update={"node_budget": share}), candidates).walk([first_index])


def _merge(branches: Sequence[BranchResult]) -> BranchResult:
    merged = BranchResult()
    for branch in branches:
        merged.nodes += branch.nodes
        merged.exhausted = merged.exhausted and branch.exhausted
        if merged.found_first:
            continue
        merged.count += branch.count
        merged.hits.extend(branch.hits)
        if branch.found_first:
            merged.found_first = True
            merged.count = 1
            merged.hits = merged.hits[:1]
    return merged


def _walk_inline(cfg: SearchConfig, candidates: List[Vector]) -> BranchResult:
    branches = []
    for index, share in enumerate(budget_shares(cfg.node_budget, len(candidates))):
        branch = _walk_branch(cfg, index, share, candidates)
        branches.append(branch)
        if branch.found_first:
            break
    return _merge(branches)


async def search_backtracking_async(cfg: SearchConfig) -> SearchOutcome:
    """Backtracking search with the root split by the first vector across processes.

    Branch k gets a fixed share of the node budget and results are merged in
    branch order, so the outcome does not depend on ``cfg.threads``.
    """
    candidates = unit_vectors(cfg.field, cfg.type.n)
    if cfg.threads <= 1:
        return _finish(cfg, candidates, _walk_inline(cfg, candidates))
    shares = budget_shares(cfg.node_budget, len(candidates))

    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        tasks = [
            loop.run_in_executor(pool, _walk_branch, cfg, index, share)
            for index, share in enumerate(shares)
        ]
        branches = await asyncio.gather(*tasks)
    logger.debug("search.branches_merged", branches=len(branches))
    return _finish(cfg, candidates, _merge(branches))


def search_backtracking(cfg: SearchConfig) -> SearchOutcome:
    """Search by placing the vectors v_jk in (j, k) order.

    Candidates are the unit-norm vectors of F^n; a placement is pruned as soon
    as one of the orthogonality or cross-term equations involving only placed
    vectors fails. One node is one candidate tried at one position. Finds
    exactly the formulas ``search_naive`` finds. The node budget is divided
    over the first-vector branches by ``budget_shares``.
    """
    logger.info(
        "search.start",
        strategy="backtracking",
        type=str(cfg.type),
        field=cfg.field.label(),
        threads=cfg.threads,
    )
    if cfg.threads <= 1:
        candidates = unit_vectors(cfg.field, cfg.type.n)
        return _finish(cfg, candidates, _walk_inline(cfg, candidates))
    return asyncio.run(search_backtracking_async(cfg))


def _finish(cfg: SearchConfig, candidates: List[Vector], result: BranchResult) -> SearchOutcome:
    formulas = []
    for hit in result.hits:
        formula = _formula_from_hit(cfg, candidates, hit)
        if not verify_formula(formula):
            raise VerificationMismatchError(f"search produced a tensor that is not a formula: {hit}")
        formulas.append(formula)
    complete = result.exhausted or result.found_first
    status = decide_status(result.count, result.exhausted)
    logger.info(
        "search.done",
        strategy="backtracking",
        status=status.value,
        count=result.count,
        nodes=result.nodes,
    )
    return SearchOutcome(
        status=status,
        formulas=formulas,
        count=result.count,
        nodes=result.nodes,
        complete=complete,
        strategy=SearchStrategy.BACKTRACKING,
        field_label=cfg.field.label(),
        type=cfg.type,
    )


def run_search(cfg: SearchConfig) -> SearchOutcome:
    """Dispatch on ``cfg.strategy``."""
    if cfg.strategy is SearchStrategy.NAIVE:
        return search_naive(cfg)
    return search_backtracking(cfg)
