"""Argument groups reused by several subcommands."""
import argparse
from typing import Optional

from packages.core.fields import QQ, CoefficientField, PrimeField, finite_field
from packages.core.sos import SosType


def add_type_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_argument_group("formula type [r, s, n]")
    group.add_argument("--r", type=int, required=required, help="Squares on the left")
    group.add_argument("--s", type=int, required=required, help="Squares on the right")
    group.add_argument("--n", type=int, required=required, help="Squares in the product")


def type_from_args(args: argparse.Namespace) -> Optional[SosType]:
    """The type given by --r/--s/--n, or None when none of them was passed."""
    values = (args.r, args.s, args.n)
    if all(v is None for v in values):
        return None
    if any(v is None for v in values):
        raise ValueError("--r, --s and --n must be given together")
    return SosType(*values)


def add_field_arguments(
    parser: argparse.ArgumentParser, default: Optional[str] = "q", extensions: bool = False
) -> None:
    kinds = ["q", "fp", "fpk"] if extensions else ["q", "fp"]
    parser.add_argument("--field", choices=kinds, default=default, help="Coefficient field")
    parser.add_argument("--p", type=int, help="Characteristic for fp/fpk")
    if extensions:
        parser.add_argument("--k", type=int, default=1, help="Extension degree for fpk")


def field_from_args(args: argparse.Namespace) -> Optional[CoefficientField]:
    """Field named by --field/--p[/--k]; None when --field was left unset."""
    if args.field is None:
        return None
    if args.field == "q":
        return QQ
    if args.p is None:
        raise ValueError(f"--field {args.field} needs --p")
    if args.field == "fp":
        return PrimeField(args.p)
    return finite_field(args.p, getattr(args, "k", 1))


def add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="Output file (default: stdout)")
