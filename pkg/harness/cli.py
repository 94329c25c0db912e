import argparse
import sys
from typing import Optional, Sequence

from eigenstruct_numeric.engine import complete_eigenstructure
from eigenstruct_numeric.tolerance import DEFAULT_MAX_RETRY, DEFAULT_PROBE_COUNT, DEFAULT_REL_RANK_TOL, ToleranceProfile
from generic_model.codim import codim_pencil_level, codim_simplified, pencil_orbit_codim
from generic_model.families import GenericStructure, generic_full_rank, generic_structures
from generic_model.linearization import companion_structure_of
from generic_model.realize import realize
from harness.perturb import run_perturb
from harness.reports import dumps, emit, structures_frame
from harness.sweep import run_sweep
from poly_core import codec
from utils_ops.envHandler import default_seed
from utils_ops.errors import HypothesisError, NumericalDiagnosticError
from utils_ops.logs import Logger

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

logger = Logger("CLI")


def _split(value: str) -> list[int]:
    try:
        return [int(part) for part in value.replace(";", ",").split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from e


def tolerance_from(args: argparse.Namespace) -> ToleranceProfile:
    return ToleranceProfile(rel_rank_tol=args.tol, probe_count=args.probes, max_retry=args.retries, seed=args.seed)


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.full_rank:
        structures = [generic_full_rank(args.m, args.n, args.d)]
    else:
        structures = generic_structures(args.m, args.n, args.r, args.d)
    frame = structures_frame(structures)
    if args.csv:
        emit(frame.to_csv(index=False, lineterminator="\n"), args.out, ".csv")
    elif args.json:
        emit(dumps([K.to_dict() for K in structures]), args.out, ".json")
    else:
        emit(frame.to_string(index=False) + "\n", args.out, ".txt")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    P = codec.load(args.path)
    signature = complete_eigenstructure(P, tolerance_from(args))
    emit(dumps(signature.to_dict()), args.out, ".json")
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    if args.full_rank:
        K = generic_full_rank(args.m, args.n, args.d)
    else:
        K = GenericStructure(args.m, args.n, args.r, args.d, args.a)
    P = realize(K, seed=args.seed, tol=tolerance_from(args), split=args.split)
    emit(codec.dumps(P) + "\n", args.out, ".json")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    report = run_sweep(args.m, args.n, args.r, args.d, args.trials, args.seed, split=args.split, full_rank=args.full_rank, tol=tolerance_from(args), workers=args.workers)
    if args.out is not None:
        emit(report.to_csv(), args.out, ".csv")
        emit(dumps(report.to_dict()), args.out, ".json")
    elif args.csv:
        emit(report.to_csv())
    else:
        emit(dumps(report.to_dict()))
    return EXIT_OK


def cmd_perturb(args: argparse.Namespace) -> int:
    report = run_perturb(args.m, args.n, args.d, args.delta, args.trials, args.seed, tolerance_from(args))
    emit(dumps(report.to_dict()), args.out, ".json")
    return EXIT_OK


def cmd_codim(args: argparse.Namespace) -> int:
    K = GenericStructure(args.m, args.n, args.r, args.d, args.a)
    spec = companion_structure_of(K)
    row = {
        "a": K.a,
        "codim": codim_simplified(K.m, K.n, K.r, K.d, K.a),
        "codim_pencil_level": codim_pencil_level(K.m, K.n, K.r, K.d, K.a),
        "codim_kcf": pencil_orbit_codim(spec),
        "companion_kcf": str(spec),
    }
    if args.json:
        emit(dumps(row), args.out, ".json")
    else:
        emit("\n".join(f"{key}: {value}" for key, value in row.items()) + "\n", args.out, ".txt")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyrank", description="Generic eigenstructures of bounded-rank matrix polynomials")
    subparsers = parser.add_subparsers(dest="command", required=True)

    sizes = argparse.ArgumentParser(add_help=False)
    sizes.add_argument("-m", type=int, required=True, help="Row count")
    sizes.add_argument("-n", type=int, required=True, help="Column count")
    sizes.add_argument("-d", "--grade", dest="d", type=int, required=True, help="Grade")

    rank = argparse.ArgumentParser(add_help=False)
    rank.add_argument("-r", type=int, default=None, help="Rank bound, 1 <= r < min(m, n)")
    rank.add_argument("--full-rank", action="store_true", help="Use the full-rank families instead")

    numeric = argparse.ArgumentParser(add_help=False)
    numeric.add_argument("--tol", type=float, default=DEFAULT_REL_RANK_TOL, help="Relative singular value cutoff")
    numeric.add_argument("--probes", type=int, default=DEFAULT_PROBE_COUNT, help="Random points for the normal rank")
    numeric.add_argument("--retries", type=int, default=DEFAULT_MAX_RETRY, help="Draws allowed per realization")
    numeric.add_argument("--seed", type=int, default=default_seed(), help="Defaults to POLYRANK_SEED")

    output = argparse.ArgumentParser(add_help=False)
    fmt = output.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    output.add_argument("--out", default=None, help="Output path; the extension is set per format")

    enum_p = subparsers.add_parser("enumerate", parents=[sizes, rank, output], help="List the generic structures")
    enum_p.set_defaults(func=cmd_enumerate)

    analyze_p = subparsers.add_parser("analyze", parents=[numeric, output], help="Complete eigenstructure of a polynomial file")
    analyze_p.add_argument("path", help="Polynomial in the JSON polynomial format")
    analyze_p.set_defaults(func=cmd_analyze)

    realize_p = subparsers.add_parser("realize", parents=[sizes, rank, numeric, output], help="Draw a verified polynomial of one family")
    realize_p.add_argument("-a", type=int, default=None, help="Family index, the right minimal index sum")
    realize_p.add_argument("--split", type=_split, default=None, help="Column degrees, e.g. 1,0")
    realize_p.set_defaults(func=cmd_realize)

    sweep_p = subparsers.add_parser("sweep", parents=[sizes, rank, numeric, output], help="Classify random bounded-rank polynomials")
    sweep_p.add_argument("--trials", type=int, default=100)
    sweep_p.add_argument("--split", type=_split, default=None, help="Fixed column degrees, e.g. 1,0")
    sweep_p.add_argument("--workers", type=int, default=None, help="Defaults to POLYRANK_WORKERS")
    sweep_p.set_defaults(func=cmd_sweep)

    perturb_p = subparsers.add_parser("perturb", parents=[sizes, numeric, output], help="Companion recovery under perturbation")
    perturb_p.add_argument("--delta", type=float, default=1e-6)
    perturb_p.add_argument("--trials", type=int, default=50)
    perturb_p.set_defaults(func=cmd_perturb)

    codim_p = subparsers.add_parser("codim", parents=[sizes, output], help="Codimension of one family, three ways")
    codim_p.add_argument("-r", type=int, required=True)
    codim_p.add_argument("-a", type=int, required=True)
    codim_p.set_defaults(func=cmd_codim)
    return parser


def _check_args(args: argparse.Namespace) -> None:
    if getattr(args, "trials", 1) < 1:
        raise HypothesisError("--trials must be at least 1")
    if getattr(args, "full_rank", False):
        return
    if hasattr(args, "r") and args.r is None and args.command in ("enumerate", "realize", "sweep"):
        raise HypothesisError("-r is required unless --full-rank is given")
    if args.command == "realize" and args.a is None:
        raise HypothesisError("-a is required unless --full-rank is given")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point. Returns 0 on success, 2 on usage or hypothesis errors and 3 on
    numerical diagnostic failures; argparse's own errors exit with 2 as well.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_args(args)
        if args.command == "sweep" and args.full_rank and args.r is None:
            args.r = min(args.m, args.n)
        return args.func(args)
    except HypothesisError as e:
        logger.log("error", f"{args.command}: invalid input", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalDiagnosticError as e:
        logger.log("error", f"{args.command}: numerical diagnostic failure", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
