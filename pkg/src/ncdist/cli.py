"""Command-line front end: ``ncdist transform | verify | enumerate``.

Exit codes: 0 success, 1 verification failure, 2 usage or malformed input,
3 domain error (a parameter outside its allowed range).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import distributions as dist
from .brownian import brownian_series
from .errors import DomainError, NCDistError
from .partitions import ENUMERATION_ADVISORY_CAP, enumerate_interval, enumerate_nc, enumerate_nc_le2
from .serialization import (
    FormatError,
    distribution_from_dict,
    distribution_to_dict,
    model_input_from_dict,
    parse_rational,
    series_from_dict,
    series_to_dict,
)
from .series import DEFAULT_DEGREE
from .suites import DEFAULT_SEED, SUITES, SuiteParams, run_suite
from .transforms import reta, reta_inverse

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

# op name -> (number of input files, parameter flag or None)
TRANSFORM_OPS = {
    "bt": (1, "t"),
    "phi": (1, None),
    "reta": (1, None),
    "reta-inv": (1, None),
    "free-power": (1, "t"),
    "boolean-power": (1, "t"),
    "free-conv": (2, None),
    "boolean-conv": (2, None),
    "mult-conv": (2, None),
    "dilate": (1, "r"),
    "semicircular": (0, "t"),
    "brownian": (1, "t"),
}

ENUMERATORS = {"nc": enumerate_nc, "nc2": enumerate_nc_le2, "interval": enumerate_interval}


class UsageError(NCDistError):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except FormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--out", help="write output here instead of stdout")
    parser.add_argument("--seed", type=int, default=None, help=f"random seed (default {DEFAULT_SEED})")
    parser.add_argument("--degree", type=int, default=None, help="truncation degree")
    parser.add_argument("--k", type=int, default=None, help="number of variables")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncdist", description="Exact computations with noncommutative distributions.")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("transform", help="apply an operation to serialized distributions")
    _common(tr)
    tr.add_argument("inputs", nargs="*", help="input JSON files (series or distribution)")
    tr.add_argument("--op", required=True, choices=sorted(TRANSFORM_OPS))
    tr.add_argument("--t", type=_rational_arg, help="time or power parameter, as p/q")
    tr.add_argument("--r", type=_rational_arg, help="dilation factor, as p/q")
    tr.add_argument("--route", choices=dist.BT_ROUTES, default="composition", help="computation route for bt")

    ve = sub.add_parser("verify", help="run a named verification suite")
    _common(ve)
    ve.add_argument("suite", choices=list(SUITES))
    ve.add_argument("--trials", type=int)
    ve.add_argument("--t", type=_rational_arg, help="restrict to a single parameter value, as p/q")
    ve.add_argument("--n", type=int, help="largest size for the exhaustive suites")
    ve.add_argument("--dim", type=int, default=3, help="matrix size for operator-model")
    ve.add_argument("--tolerance", type=float, default=1e-9, help="mixed tolerance for operator-model")
    ve.add_argument("--input", help="ModelInput JSON for operator-model instead of random matrices")

    en = sub.add_parser("enumerate", help="count or list partitions")
    _common(en)
    en.add_argument("kind", choices=sorted(ENUMERATORS))
    en.add_argument("n", type=int)
    en.add_argument("--list", action="store_true", help="print every partition")
    return parser


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from None


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _run_transform(args) -> int:
    arity, param = TRANSFORM_OPS[args.op]
    if len(args.inputs) != arity:
        raise UsageError(f"--op {args.op} takes {arity} input file(s), got {len(args.inputs)}")
    value = getattr(args, param) if param else None
    if param and value is None:
        raise UsageError(f"--op {args.op} needs --{param}")

    if args.op == "semicircular":
        k = args.k if args.k is not None else 1
        degree = args.degree if args.degree is not None else DEFAULT_DEGREE
        _emit(_dumps(distribution_to_dict(dist.semicircular_family(value, k, degree))), args.out)
        return EXIT_OK

    raw = [_load_json(path) for path in args.inputs]
    if args.op in ("reta", "reta-inv"):
        f = series_from_dict(raw[0])
        if args.degree is not None:
            f = f.truncate(min(args.degree, f.degree))
        result = reta(f) if args.op == "reta" else reta_inverse(f)
        _emit(_dumps(series_to_dict(result)), args.out)
        return EXIT_OK

    ds = [distribution_from_dict(d) for d in raw]
    if args.degree is not None:
        ds = [d.truncate(min(args.degree, d.degree)) for d in ds]
    if args.k is not None and any(d.k != args.k for d in ds):
        raise UsageError(f"--k {args.k} does not match the input alphabet size")
    op = args.op
    if op == "bt":
        out = dist.bbp_transform(ds[0], value, args.route)
    elif op == "phi":
        out = dist.phi_map(ds[0])
    elif op == "free-power":
        out = dist.free_power(ds[0], value)
    elif op == "boolean-power":
        out = dist.boolean_power(ds[0], value)
    elif op == "free-conv":
        out = dist.free_convolve(*ds)
    elif op == "boolean-conv":
        out = dist.boolean_convolve(*ds)
    elif op == "mult-conv":
        out = dist.mult_convolve(*ds)
    elif op == "dilate":
        out = dist.dilate_dist(ds[0], value)
    else:
        out = dist.Distribution(brownian_series(ds[0], value))
    _emit(_dumps(distribution_to_dict(out)), args.out)
    return EXIT_OK


def _run_verify(args) -> int:
    params = SuiteParams(
        k=args.k if args.k is not None else 2,
        degree=args.degree,
        seed=args.seed if args.seed is not None else DEFAULT_SEED,
        trials=args.trials,
        t=args.t,
        n=args.n,
        dim=args.dim,
        tolerance=args.tolerance,
    )
    if params.k < 1:
        raise UsageError("--k must be at least 1")
    if params.trials is not None and params.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.input:
        if args.suite != "operator-model":
            raise UsageError("--input only applies to the operator-model suite")
        params.model_input = model_input_from_dict(_load_json(args.input))
    result = run_suite(args.suite, params)
    _emit(_dumps(result.to_dict()), args.out)
    return EXIT_OK if result.passed else EXIT_FAIL


def _run_enumerate(args) -> int:
    if not 1 <= args.n <= ENUMERATION_ADVISORY_CAP:
        raise UsageError(f"n must lie in 1..{ENUMERATION_ADVISORY_CAP}, got {args.n}")
    partitions = list(ENUMERATORS[args.kind](args.n))
    lines = [str(len(partitions))]
    if args.list:
        lines.extend(str(p) for p in partitions)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handlers = {"transform": _run_transform, "verify": _run_verify, "enumerate": _run_enumerate}
    try:
        return handlers[args.command](args)
    except DomainError as exc:
        print(f"ncdist: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NCDistError as exc:
        print(f"ncdist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
