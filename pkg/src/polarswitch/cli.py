"""Command line entry point: ``polarswitch {build,verify,report-schema}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify
from .constructions import build_family
from .errors import DomainError, ResourceError, UsageError, VerificationError
from .graph import graph6_encode, srg_params, write_edge_list, write_labels
from .symplectic import DEFAULT_CAP

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
FAMILIES = ("NO-even", "NO-odd", "NO-odd-W", "GammaO", "Sigma")
BUILD_Q = (2, 4)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    """``"2"``, ``"1,2,3"`` or ``"1-3"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _sign(text: str) -> int:
    if text in ("+", "+1", "1", "plus"):
        return 1
    if text in ("-", "-1", "minus"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polarswitch", description="Polar strongly regular graphs, two-graphs and switching checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="construct a graph and export it")
    b.add_argument("family", choices=FAMILIES)
    b.add_argument("--m", type=_positive, required=True)
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--sign", type=_sign, default=1, help="+ or - (sign of the graph)")
    b.add_argument("--out", type=Path, help="graph file; labels go to OUT.labels (default: graph6 on stdout)")
    b.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")
    b.add_argument("--threads", type=_positive, default=1, help="reserved; computation is single-threaded")

    v = sub.add_parser("verify", help="run a verification scope")
    v.add_argument("scope", choices=verify.SCOPES)
    v.add_argument("--m", type=_int_list, help="m values, e.g. 2 or 1-3 or 1,2")
    v.add_argument("--q", type=_int_list, help="q values, e.g. 2,4")
    v.add_argument("--json", action="store_true", help="print the JSON report instead of the table")
    v.add_argument("--out", type=Path, help="also write the JSON report to this file")
    v.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="group enumeration cap")
    v.add_argument("--threads", type=_positive, default=1, help="reserved; computation is single-threaded")
    v.add_argument("--no-timing", action="store_true", help="report wall_time_ms as 0 for byte-identical output")

    sub.add_parser("report-schema", help="print the JSON schema of verification reports")
    return p


def cmd_build(args: argparse.Namespace) -> int:
    if args.q not in BUILD_Q:
        raise UsageError(f"build supports q in {BUILD_Q}, got {args.q}")
    g = build_family(args.family, args.m, args.q, args.sign)
    data = graph6_encode(g) + b"\n" if args.format == "graph6" else write_edge_list(g).encode()
    params = srg_params(g)
    if args.out is None:
        sys.stdout.write(data.decode())
    else:
        args.out.write_bytes(data)
        Path(str(args.out) + ".labels").write_text(write_labels(g))
    print(f"{args.family} m={args.m} q={args.q} sign={verify.sign_str(args.sign)}: {params}")
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify.run(args.scope, args.m, args.q, cap=args.cap)
    if args.no_timing:
        report.wall_time_ms = 0
    if args.out is not None:
        args.out.write_text(report.to_json())
    sys.stdout.write(report.to_json() if args.json else report.to_table())
    if report.status == "resource":
        return EXIT_RESOURCE
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_report_schema(args: argparse.Namespace) -> int:
    sys.stdout.write(json.dumps(verify.REPORT_SCHEMA, indent=2, sort_keys=True) + "\n")
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"build": cmd_build, "verify": cmd_verify, "report-schema": cmd_report_schema}[args.command]
    try:
        return handler(args)
    except (UsageError, DomainError) as exc:
        print(f"polarswitch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"polarswitch: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"polarswitch: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
