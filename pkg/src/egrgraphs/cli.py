"""Command-line front end.

Exit codes: 0 success, 1 parameter error, 2 I/O or parse error (including
a missing audit corpus), 3 verification mismatch, 4 resource refusal.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import constructions, suzuki
from .bounds import BoundQuery, egr_lower_bound, excess_report
from .census import is_egr
from .errors import DomainError, ParameterError, ParseError, ResourceError
from .ingest import (
    CORPUS_ENV,
    audit_corpus,
    corpus_files,
    load_manifest,
    parse_adjlist,
    read_graph6_lines,
    write_adjlist,
    write_graph6,
)

log = logging.getLogger("egrgraphs")

EXIT_OK, EXIT_PARAM, EXIT_IO, EXIT_MISMATCH, EXIT_RESOURCE = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _write_graph(G, args):
    data = write_adjlist(G).encode() if args.format == "adjlist" else write_graph6(G) + b"\n"
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_construct(args) -> int:
    if args.family == "biaffine":
        if args.q is None:
            raise ParameterError("construct biaffine needs --q")
        G = constructions.biaffine(args.q)
    elif args.family == "special32":
        G = constructions.special32()
    else:
        G = suzuki.suzuki_graph(args.q if args.q is not None else 8)
    _write_graph(G, args)
    return EXIT_OK


def _read_input(path: str):
    raw = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    text = raw.decode("utf-8", errors="replace")
    if "{" in text:
        return parse_adjlist(text)
    graphs = read_graph6_lines(raw)
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _parse_expect(s: str):
    try:
        parts = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ParameterError(f"--expect must be v,k,g,lambda, got {s!r}") from None
    if len(parts) != 4:
        raise ParameterError(f"--expect must be v,k,g,lambda, got {s!r}")
    return parts


def cmd_verify(args) -> int:
    expect = _parse_expect(args.expect) if args.expect else None
    G = _read_input(args.file)
    rep = is_egr(G, threads=args.threads)
    payload = rep.to_dict()
    lines = [rep.summary()]
    status = EXIT_OK
    if expect is not None:
        match = rep.params == expect
        payload["expected"] = list(expect)
        payload["match"] = match
        lines.append(f"expected egr({','.join(map(str, expect))}): {'match' if match else 'MISMATCH'}")
        status = EXIT_OK if match else EXIT_MISMATCH
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_bounds(args) -> int:
    query = BoundQuery(args.k, args.g, args.lam, bipartite=args.bipartite, parity_refine=args.parity)
    if args.order is not None:
        rep = excess_report(args.order, query, excluded_orders=args.exclude or ())
    else:
        rep = egr_lower_bound(query)
    _emit(args, rep.to_dict(), rep.to_text())
    return EXIT_OK


def cmd_audit(args) -> int:
    manifest = load_manifest(args.manifest)
    files = corpus_files(args.dir)
    audit = audit_corpus(files, manifest, threads=args.threads)
    lines = [f"status: {audit.status}"]
    for e in audit.entries:
        if e.error:
            lines.append(f"{e.source}: error: {e.error}")
        else:
            vals = ",".join(str(x) for x in e.lambda_multiset)
            lines.append(
                f"{e.source}: v={e.order} degrees={list(e.degrees)} girth={e.girth} "
                f"lambda values={{{vals}}} egr={str(e.is_egr).lower()}"
            )
    lines += [f"note: {n}" for n in audit.notes]
    _emit(args, audit.to_dict(), "\n".join(lines))
    if audit.status == "data missing":
        return EXIT_IO
    return EXIT_OK if audit.status == "pass" else EXIT_MISMATCH


def cmd_export(args) -> int:
    text = constructions.appendix_fixture_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--threads", type=int, default=1, help="worker processes for the cycle census")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="egrgraphs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="emit a graph as graph6")
    c.add_argument("family", choices=["biaffine", "special32", "suzuki"])
    c.add_argument("--q", type=int)
    c.add_argument("--out")
    c.add_argument("--format", choices=["graph6", "adjlist"], default="graph6")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="census a graph file ('-' for stdin)")
    v.add_argument("file")
    v.add_argument("--expect", help="v,k,g,lambda")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", parents=[common], help="lower bounds on n(k,g,lambda)")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--g", type=int, required=True)
    b.add_argument("--lambda", dest="lam", type=int, required=True)
    b.add_argument("--bipartite", action="store_true")
    b.add_argument("--parity", action="store_true")
    b.add_argument("--order", type=int, help="order of a known graph; reports its excess")
    b.add_argument("--exclude", type=int, action="append", help="order excluded by an audit")
    b.set_defaults(func=cmd_bounds)

    a = sub.add_parser("audit", parents=[common], help="census an external cage corpus")
    a.add_argument("--dir", help=f"corpus directory (default ${CORPUS_ENV})")
    a.add_argument("--manifest", help="JSON manifest (default: bundled (5,5)-cage manifest)")
    a.set_defaults(func=cmd_audit)

    e = sub.add_parser("export", parents=[common], help="dump an embedded fixture")
    e.add_argument("--fixture", choices=["special32-appendix"], required=True)
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARAM
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except ResourceError as exc:
        log.error("%s", exc)
        return EXIT_RESOURCE
    except (ParseError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_IO
    except (ParameterError, DomainError) as exc:
        log.error("%s", exc)
        return EXIT_PARAM


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
