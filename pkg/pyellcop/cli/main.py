import argparse
import logging
import sys

from pyellcop import __version__
from pyellcop.cli.commands import (
    EXIT_INPUT_ERROR,
    cmd_bench,
    cmd_experiment,
    cmd_fit,
    cmd_gen_corr,
    cmd_sample,
)
from pyellcop.cli.exceptions import UsageError
from pyellcop.cli.experiment import DEFAULT_DIMS, DEFAULT_NUS
from pyellcop.cli.schemas import EXPERIMENT_COLUMNS
from pyellcop.exceptions import ValidationError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _nu_token(value: str) -> float | None:
    if value.lower() in ("gaussian", "inf"):
        return None
    nu = float(value)
    if not nu > 0:
        raise argparse.ArgumentTypeError(f"nu must be positive, got {value}")
    return nu


def _int_list(value: str) -> list[int]:
    return [int(v) for v in value.split(",") if v]


def _nu_list(value: str) -> list[float | None]:
    return [_nu_token(v) for v in value.split(",") if v]


def _add_family(p: argparse.ArgumentParser, default: str, nu: float | None) -> None:
    p.add_argument("--family", choices=["gaussian", "t"], default=default)
    p.add_argument("--nu", type=float, default=nu, help="degrees of freedom of the t copula")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="pyellcop",
        description="Maximum likelihood estimation of Gaussian and Student's t copulas.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("fit", help="fit a correlation matrix to pseudo-observations")
    p.add_argument("--input", required=True, help="CSV file, one observation per row")
    p.add_argument("--format", choices=["uniform", "ranks"], default="uniform")
    _add_family(p, "gaussian", None)
    p.add_argument(
        "--method", choices=["ig", "approx", "naive", "full-t", "moments"], default="ig"
    )
    p.add_argument("--lambda0", type=float)
    p.add_argument("--k1", type=float)
    p.add_argument("--k2", type=float)
    p.add_argument("--tol", type=float, help="stopping tolerance on the parameter change")
    p.add_argument("--max-iters", type=int)
    p.add_argument("--nu-lo", type=float, default=0.5, help="lower end of the full-t bracket")
    p.add_argument("--nu-hi", type=float, default=100.0, help="upper end of the full-t bracket")
    p.add_argument("--trace", action="store_true", help="include the step-size trace")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output JSON file, stdout when omitted")
    p.set_defaults(handler=cmd_fit)

    p = sub.add_parser("sample", help="sample a copula with a random correlation matrix")
    p.add_argument("--dim", type=int, required=True)
    _add_family(p, "gaussian", None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output CSV file, stdout when omitted")
    p.add_argument("--rho-out", help="also write the generator correlation matrix")
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("gen-corr", help="generate a random correlation matrix")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output CSV file, stdout when omitted")
    p.add_argument("--spectrum-out", help="eigenvalue CSV, next to --out by default")
    p.set_defaults(handler=cmd_gen_corr)

    p = sub.add_parser(
        "experiment",
        help="inverse gradient against the approximate method on synthetic cases",
        epilog="CSV columns: " + ", ".join(EXPERIMENT_COLUMNS),
    )
    p.add_argument("--dims", type=_int_list, default=list(DEFAULT_DIMS))
    p.add_argument(
        "--nus",
        type=_nu_list,
        default=list(DEFAULT_NUS),
        help="comma-separated degrees of freedom, 'gaussian' for the Gaussian copula",
    )
    p.add_argument("--cases-per-cell", type=int, default=100)
    p.add_argument("--n-obs", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, help="worker processes, ELLCOP_JOBS when omitted")
    p.add_argument("--eig-bins", type=int, help="equal-count bins of the minimum eigenvalue")
    p.add_argument("--out", required=True, help="output CSV file")
    p.add_argument("--summary", help="summary JSON, next to --out by default")
    p.set_defaults(handler=cmd_experiment)

    p = sub.add_parser("bench", help="time the inverse gradient fit")
    p.add_argument("--dim", type=int, default=25)
    p.add_argument("--n-obs", type=int, default=100)
    _add_family(p, "t", 5.0)
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output JSON file, stdout when omitted")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Entry point of the ``pyellcop`` command.

    Exit codes: 0 on success, 1 on usage or input errors, 2 when a fit did
    not converge.
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"pyellcop: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    logging.basicConfig(level=args.log_level, format=LOG_FORMAT, stream=sys.stderr)

    if args.command == "bench" and args.family == "gaussian":
        args.nu = None

    try:
        return args.handler(args)
    except (UsageError, ValidationError, ValueError, OSError) as e:
        logger.debug("command failed", exc_info=True)
        print(f"pyellcop: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
