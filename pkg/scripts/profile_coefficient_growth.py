"""
Profile coefficient growth of rational Buchberger runs on random small ideals.

For every random ideal the script records ceil(log2(max P)) of the basis
after each extension step, then prints the worst value seen per step over
all ideals. Runs are reproducible from --seed.

Run: python scripts/profile_coefficient_growth.py --seed 7 --ideals 50
"""
import argparse
import random
import sys
from pathlib import Path
from typing import Dict, List

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import structlog

from apps.cli.config import Settings
from apps.cli.logging_config import setup_logging
from packages.core.bounds import ceil_log2
from packages.core.errors import ResourceCapExceeded
from packages.core.fields import QQ
from packages.core.groebner import buchberger
from packages.core.multipoly import Polynomial, PolynomialRing

logger = structlog.get_logger()

COEFFICIENTS = [-3, -2, -1, 1, 2, 3]


def random_generators(rng: random.Random, nvars: int, ngens: int, degree: int) -> List[Polynomial]:
    """Nonzero generators of degree <= degree with small integer coefficients."""
    ring = PolynomialRing(QQ, nvars)
    generators: List[Polynomial] = []
    while len(generators) < ngens:
        terms = []
        for _ in range(rng.randint(1, 3)):
            exps = [0] * nvars
            for _ in range(rng.randint(0, degree)):
                exps[rng.randrange(nvars)] += 1
            terms.append((rng.choice(COEFFICIENTS), tuple(exps)))
        g = ring.from_terms(terms)
        if not g.is_zero():
            generators.append(g)
    return generators


def profile(args: argparse.Namespace) -> Dict[int, int]:
    """Worst observed log2 of max P per step, over all ideals that finished."""
    rng = random.Random(args.seed)
    worst: Dict[int, int] = {}
    capped = 0

    for index in range(args.ideals):
        generators = random_generators(rng, args.vars, args.gens, args.degree)
        try:
            result = buchberger(generators, max_steps=args.max_steps)
        except ResourceCapExceeded:
            capped += 1
            logger.info("profile.capped", ideal=index)
            continue

        growth = [ceil_log2(p) for p in result.trace.max_p_by_step]
        logger.debug("profile.ideal", ideal=index, proper=result.is_proper, growth=growth)
        for step, bits in enumerate(growth):
            worst[step] = max(worst.get(step, 0), bits)

    logger.info("profile.done", ideals=args.ideals, capped=capped, steps=len(worst))
    return worst


def main() -> None:
    parser = argparse.ArgumentParser(description="Coefficient growth of random rational ideals")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--ideals", type=int, default=100, help="Number of random ideals")
    parser.add_argument("--vars", type=int, default=3, help="Variables per ideal")
    parser.add_argument("--gens", type=int, default=3, help="Generators per ideal")
    parser.add_argument("--degree", type=int, default=2, help="Largest generator degree")
    parser.add_argument("--max-steps", type=int, default=200, help="Basis extension cap per run")
    parser.add_argument("--log-level", default="INFO")
    args = parser.parse_args()

    setup_logging(Settings(log_level=args.log_level, seed=args.seed))
    worst = profile(args)

    print(f"{'step':>5}  {'log2 max P':>10}")
    for step in sorted(worst):
        print(f"{step:>5}  {worst[step]:>10}")


if __name__ == "__main__":
    main()
