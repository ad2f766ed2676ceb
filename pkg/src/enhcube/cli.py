"""Command-line front end.

Exit status: 0 on success, 1 for a verification failure or an inadmissible
request, 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .embedder import embed_cycle
from .errors import (
    ConfigurationError,
    EnhcubeError,
    InadmissibleLengthError,
    NotAnEdgeError,
    ParameterError,
    ResourceError,
)
from .harness import ORACLE_LEVELS, SweepConfig, export_graph, run_sweep
from .topology import Params, classify_edge

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(args) -> Params:
    return Params(args.n, args.k)


def _edge(p: Params, text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--edge expects U,V, got {text!r}")
    return p.parse(parts[0]), p.parse(parts[1])


def _diag(msg: str) -> None:
    print(f"enhcube: {msg}", file=sys.stderr)


def cmd_construct(args) -> int:
    p = _params(args)
    u, v = _edge(p, args.edge)
    try:
        c = embed_cycle(p, (u, v), args.length)
    except (InadmissibleLengthError, NotAnEdgeError) as exc:
        if args.json:
            doc = {"error": type(exc).__name__, "message": str(exc)}
            spec = getattr(exc, "spec", None)
            if spec is not None:
                doc["admissible"] = {"even": spec.evens, "odd": spec.odds}
            print(json.dumps(doc, sort_keys=True))
        _diag(str(exc).replace("\n", " "))
        return EXIT_FAIL
    if args.json:
        doc = {
            "n": p.n,
            "k": p.k,
            "edge": [p.label(u), p.label(v)],
            "length": c.length,
            "cycle": c.labels(),
            "edge_classes": [str(classify_edge(p, a, b)) for a, b in c.pairs()],
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(c.labels()))
    return EXIT_OK


def _summarize(report) -> None:
    for r in report.instances:
        c = r.constructions
        status = "ok" if not r.failures and not r.mismatches else "FAIL"
        extra = ""
        if r.odd_girth.get("measured", "absent") != "absent":
            extra += f" odd_girth={r.odd_girth['measured']}"
        if r.spectra:
            extra += f" spectra_mismatch={r.spectra['mismatches']}"
        print(
            f"Q_{{{r.n},{r.k}}}: {c['validated']}/{c['attempted']} cycles validated"
            f" over {c['edges']} edges{extra} [{status}]"
        )
        for f in r.failures[:10]:
            print(f"  {f['kind']}: {f['detail']}\n    reproduce: {f['reproduce']}")
    print(f"verdict: {report.verdict}")


def _write_report(report, path) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(report.to_json())


def cmd_verify(args) -> int:
    p = _params(args)
    edge = _edge(p, args.edge) if args.edge else None
    if edge is not None:
        classify_edge(p, *edge)
    cfg = SweepConfig(p.n, p.n, [p.k], None, args.oracle, 1, edge)
    report = run_sweep(cfg)
    _summarize(report)
    _write_report(report, args.report)
    return EXIT_OK if report.verdict == "pass" else EXIT_FAIL


def cmd_sweep(args) -> int:
    cfg = SweepConfig(args.min_n, args.max_n, args.k, None, args.oracle, args.jobs)
    report = run_sweep(cfg)
    _summarize(report)
    _write_report(report, args.report)
    return EXIT_OK if report.verdict == "pass" else EXIT_FAIL


def cmd_export(args) -> int:
    data = export_graph(_params(args), args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enhcube", description="Cycle embedding and verification for enhanced hypercubes Q_{n,k}."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def nk(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("construct", help="build a cycle of a given length through an edge")
    nk(sp)
    sp.add_argument("--edge", required=True, help="U,V as n-bit binary labels")
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="verify one Q_{n,k}, optionally one edge")
    nk(sp)
    sp.add_argument("--edge")
    sp.add_argument("--oracle", choices=ORACLE_LEVELS, default="bounds")
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="run the verification matrix over a range of n")
    sp.add_argument("--min-n", type=int, default=3)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--k", type=int, action="append", help="restrict to these k (repeatable)")
    sp.add_argument("--oracle", choices=ORACLE_LEVELS, default="bounds")
    sp.add_argument("--report")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("export", help="write Q_{n,k} as DOT or JSON edge list")
    nk(sp)
    sp.add_argument("--format", choices=("dot", "json"), default="dot")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, ParameterError, ConfigurationError, ResourceError) as exc:
        _diag(str(exc))
        return EXIT_USAGE
    except NotAnEdgeError as exc:
        _diag(str(exc))
        return EXIT_FAIL
    except EnhcubeError as exc:
        _diag(f"internal error: {exc}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
