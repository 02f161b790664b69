"""Command-line interface: compute sequences and polynomials, run identity
checks.

Exit codes are the machine contract: 0 success, 1 computation error (caps,
invalid index), 2 usage error or unknown identity id, 3 verification
failure.

An optional key=value config file (delannoy-jacobi.conf in the working
directory, or the path in DJ_CONFIG) supplies grid and enumeration caps;
command-line flags override it.
"""

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import families
from . import identities
from . import paths as lp
from .families import InvalidIndex
from .paths import CapExceeded
from .render import format_poly, format_rational, parse_rational

CONFIG_FILENAME = "delannoy-jacobi.conf"
CONFIG_ENV_VAR = "DJ_CONFIG"
CONFIG_KEYS = ("max_n", "enumeration_cap", "pair_cap", "weight_grid")

POLY_FAMILIES = {
    "jacobi": lambda n, a, b: families.jacobi(n, a, b),
    "shifted-jacobi": lambda n, a, b: families.shifted_jacobi(n, a, b),
    "romanovski": lambda n, a, b: families.romanovski(n, a, b),
    "legendre": lambda n, a, b: families.legendre(n),
    "shifted-legendre": lambda n, a, b: families.shifted_legendre(n),
    "laguerre": lambda n, a, b: families.laguerre(n),
    "laguerre-gen": lambda n, a, b: families.laguerre_gen(n, b),
    "narayana": lambda n, a, b: families.narayana(n),
    "schroder": lambda n, a, b: families.schroder_poly(n),
}

SEQUENCES = ("central-delannoy", "schroder", "delannoy-row")

EPILOG = """\
formats:
  text   human-readable values (default)
  json   one JSON object on stdout
  csv    header row then data rows; columns are
           delannoy:  m,n,u,v,w,value
           schroder:  n,u,v,w,value
           poly:      power,coefficient   (ascending powers)
           sequence:  index,value

rational flags (--u/--v/--w) take integers or p/q literals; decimals are
not accepted.

config file: key=value lines (keys: max_n, enumeration_cap, pair_cap,
weight_grid as comma-separated rationals), read from ./delannoy-jacobi.conf
or the path in DJ_CONFIG; flags override the file.

exit codes: 0 success; 1 computation error; 2 usage error or unknown
identity; 3 verification failure.
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delannoy-jacobi",
        description="Exact lattice-path polynomial computations and identity checks",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute numbers, polynomials, sequences")
    csub = compute.add_subparsers(dest="what", required=True)

    pd = csub.add_parser("delannoy", help="weighted Delannoy total at (m, n)")
    pd.add_argument("--m", type=int, required=True)
    pd.add_argument("--n", type=int, required=True)
    _add_weight_flags(pd)
    _add_format_flag(pd)

    ps = csub.add_parser("schroder", help="weighted Schroeder total at (n, n)")
    ps.add_argument("--n", type=int, required=True)
    _add_weight_flags(ps)
    _add_format_flag(ps)

    pp = csub.add_parser("poly", help="print one member of a polynomial family")
    pp.add_argument("--family", choices=sorted(POLY_FAMILIES), required=True)
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--alpha", type=int, default=0)
    pp.add_argument("--beta", type=int, default=0)
    _add_format_flag(pp)

    pq = csub.add_parser("sequence", help="print an integer sequence table")
    pq.add_argument("--name", choices=SEQUENCES, required=True)
    pq.add_argument("--count", type=int, required=True)
    pq.add_argument("--m", type=int, help="row index (delannoy-row only)")
    _add_format_flag(pq)

    verify = sub.add_parser("verify", help="run identity checks")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--id", help="registry id of one identity")
    group.add_argument("--all", action="store_true", help="run the whole registry")
    verify.add_argument("--max-n", type=int, help="clamp every index grid")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", help="write the JSON report to this file")
    return parser


def _add_weight_flags(parser: argparse.ArgumentParser) -> None:
    for flag in ("u", "v", "w"):
        parser.add_argument(
            f"--{flag}", type=_rational_flag, default=Fraction(1),
            help=f"{flag} step weight, integer or p/q (default 1)",
        )


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _rational_flag(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def load_config_file() -> dict:
    """Read the optional key=value config; missing file means empty config."""
    path = os.environ.get(CONFIG_ENV_VAR) or CONFIG_FILENAME
    if not os.path.exists(path):
        return {}
    values: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            if key == "weight_grid":
                values[key] = tuple(
                    parse_rational(part) for part in value.split(",") if part.strip()
                )
            else:
                values[key] = int(value)
    return values


def make_suite_config(args) -> identities.SuiteConfig:
    settings = load_config_file()
    if getattr(args, "max_n", None) is not None:
        settings["max_n"] = args.max_n
    return identities.SuiteConfig(**settings)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _run_compute(args)
        return _run_verify(args)
    except (CapExceeded, InvalidIndex, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


def _run_compute(args) -> int:
    if args.what == "delannoy":
        wt = lp.WeightTriple.of(args.u, args.v, args.w)
        value = lp.delannoy_weighted(args.m, args.n, wt).constant_value()
        record = {
            "m": args.m, "n": args.n,
            "u": str(args.u), "v": str(args.v), "w": str(args.w),
            "value": format_rational(value),
        }
        _emit_scalar(args.format, record, ("m", "n", "u", "v", "w", "value"))
    elif args.what == "schroder":
        wt = lp.WeightTriple.of(args.u, args.v, args.w)
        value = lp.schroder_weighted(args.n, wt).constant_value()
        record = {
            "n": args.n,
            "u": str(args.u), "v": str(args.v), "w": str(args.w),
            "value": format_rational(value),
        }
        _emit_scalar(args.format, record, ("n", "u", "v", "w", "value"))
    elif args.what == "poly":
        poly = POLY_FAMILIES[args.family](args.n, args.alpha, args.beta)
        if args.format == "text":
            print(format_poly(poly))
        elif args.format == "json":
            print(json.dumps({
                "family": args.family,
                "n": args.n,
                "alpha": args.alpha,
                "beta": args.beta,
                "coefficients": [str(c) for c in poly.coeffs],
                "text": format_poly(poly),
            }))
        else:
            _print_csv(
                ("power", "coefficient"),
                [(k, str(c)) for k, c in enumerate(poly.coeffs)],
            )
    elif args.what == "sequence":
        values = _sequence_values(args)
        if args.format == "text":
            print(", ".join(str(v) for v in values))
        elif args.format == "json":
            print(json.dumps({"name": args.name, "values": [str(v) for v in values]}))
        else:
            _print_csv(("index", "value"), list(enumerate(values)))
    return 0


def _sequence_values(args) -> list[int]:
    if args.count < 0:
        raise ValueError("--count must be nonnegative")
    if args.name == "central-delannoy":
        return [int(lp.delannoy_weighted(k, k).constant_value()) for k in range(args.count)]
    if args.name == "schroder":
        return [int(lp.schroder_weighted(k).constant_value()) for k in range(args.count)]
    if args.m is None:
        raise ValueError("sequence delannoy-row requires --m")
    return [
        int(lp.delannoy_weighted(args.m, k).constant_value()) for k in range(args.count)
    ]


def _emit_scalar(fmt: str, record: dict, columns: tuple[str, ...]) -> None:
    if fmt == "text":
        print(record["value"])
    elif fmt == "json":
        print(json.dumps(record))
    else:
        _print_csv(columns, [tuple(record[c] for c in columns)])


def _print_csv(header: tuple, rows: list[tuple]) -> None:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(out.getvalue())


def _run_verify(args) -> int:
    config = make_suite_config(args)
    if args.all:
        reports = identities.run_all(config)
    else:
        try:
            reports = [identities.run_identity(args.id, config)]
        except identities.UnknownIdentity as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    payload = [r.to_dict() for r in reports]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for report in reports:
            line = (
                f"{report.status.upper():4s} {report.id:26s} "
                f"cases={report.cases_run:<6d} {report.millis}ms"
            )
            print(line)
            if report.counterexample is not None:
                print(f"     counterexample: {report.counterexample}")
            if report.notes:
                print(f"     note: {report.notes}")
        failed = sum(1 for r in reports if r.status == "fail")
        print(f"{len(reports)} identities: {len(reports) - failed} passed, {failed} failed")
    return 3 if any(r.status == "fail" for r in reports) else 0
