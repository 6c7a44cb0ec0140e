"""Graph I/O (graph6, 1-based adjacency lists) and corpus auditing."""
from __future__ import annotations

import json
import os
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .census import is_egr
from .errors import EgrError, ParseError
from .graph import ACYCLIC, Graph

GRAPH6_HEADER = b">>graph6<<"
CORPUS_ENV = "EGR_CORPUS_DIR"


# -- graph6 ----------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def write_graph6(G: Graph) -> bytes:
    """graph6 bytes for G, without header or trailing newline."""
    n = G.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) for i in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def parse_graph6(data) -> Graph:
    """Decode one graph6 record (optional header, optional trailing newline)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = bytes(data)
    start = 0
    if data.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    for off in range(start, len(data)):
        if not 63 <= data[off] <= 126:
            raise ParseError(f"byte {data[off]!r} outside graph6 range [63, 126]", off)
    pos = start
    if pos >= len(data):
        raise ParseError("missing size prefix", pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        chunk = data[pos + 2 : pos + 8]
        if len(chunk) < 6:
            raise ParseError("truncated size prefix", pos)
        n = 0
        for c in chunk:
            n = (n << 6) | (c - 63)
        pos += 8
    else:
        chunk = data[pos + 1 : pos + 4]
        if len(chunk) < 3:
            raise ParseError("truncated size prefix", pos)
        n = 0
        for c in chunk:
            n = (n << 6) | (c - 63)
        pos += 4
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"truncated edge field: need {nbytes} bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after edge field", pos + nbytes)
    edges = []
    k = 0
    i, j = 0, 1
    for off, c in enumerate(body):
        v = c - 63
        for s in range(5, -1, -1):
            if k >= nbits:
                if (v >> s) & 1:
                    raise ParseError("nonzero padding bit", pos + off)
                continue
            if (v >> s) & 1:
                edges.append((i, j))
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, edges)


def read_graph6_lines(text) -> list[Graph]:
    """Every non-blank line of a graph6 file as a graph."""
    if isinstance(text, bytes):
        lines = text.splitlines()
    else:
        lines = [ln.encode("ascii", errors="replace") for ln in text.splitlines()]
    return [parse_graph6(ln.strip()) for ln in lines if ln.strip()]


# -- adjacency lists -------------------------------------------------------

_SET_RE = re.compile(r"\{([^{}]*)\}")


def parse_adjlist(text: str) -> Graph:
    """Parse a vertex count followed by brace-delimited 1-based neighbour sets.

    Accepts the plain form ("2\\n{2}\\n{1}") and Magma's ``Graph<n|[...]>``.
    """
    first = text.find("{")
    head = text if first < 0 else text[:first]
    m = re.search(r"\d+", head)
    if m is None:
        raise ParseError("missing vertex count header", 0)
    n = int(m.group())
    sets = []
    for mo in _SET_RE.finditer(text, first if first >= 0 else len(text)):
        items = [t.strip() for t in mo.group(1).split(",") if t.strip()]
        try:
            sets.append(([int(t) for t in items], mo.start()))
        except ValueError:
            raise ParseError(f"non-integer entry in {mo.group(0)!r}", mo.start()) from None
    if len(sets) != n:
        raise ParseError(f"header says {n} vertices but {len(sets)} neighbour sets given")
    nbrs = []
    for u, (items, off) in enumerate(sets, start=1):
        for v in items:
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} in the set of vertex {u} is out of range 1..{n}", off)
            if v == u:
                raise ParseError(f"self-loop at vertex {u}", off)
        nbrs.append(set(items))
    for u, s in enumerate(nbrs, start=1):
        for v in s:
            if u not in nbrs[v - 1]:
                raise ParseError(f"asymmetric adjacency: {v} listed for {u} but {u} not listed for {v}")
    return Graph(n, ((u - 1, v - 1) for u, s in enumerate(nbrs, start=1) for v in s if u < v))


def write_adjlist(G: Graph) -> str:
    """Plain 1-based adjacency list: count line, then one set per line."""
    lines = [str(G.n)]
    for a in G.adj:
        lines.append("{" + ", ".join(str(v + 1) for v in a) + "}")
    return "\n".join(lines) + "\n"


def read_graph_file(path) -> list[Graph]:
    """Graphs stored in a file: graph6 lines, or one adjacency list."""
    path = Path(path)
    raw = path.read_bytes()
    ext = path.suffix.lower()
    if ext in (".g6", ".graph6"):
        return read_graph6_lines(raw)
    text = raw.decode("utf-8", errors="replace")
    if ext in (".adj", ".txt", ".mag") or "{" in text:
        return [parse_adjlist(text)]
    return read_graph6_lines(raw)


# -- corpus audit ----------------------------------------------------------

def load_manifest(path=None) -> dict:
    if path is None:
        text = resources.files("egrgraphs").joinpath("data/cages55_manifest.json").read_text()
    else:
        text = Path(path).read_text()
    return json.loads(text)


@dataclass
class AuditEntry:
    source: str
    order: int | None = None
    degrees: dict[int, int] = field(default_factory=dict)
    girth: object = None
    lambda_multiset: dict[int, int] = field(default_factory=dict)
    is_egr: bool | None = None
    checks_ok: bool = False
    error: str | None = None

    def to_dict(self):
        return {
            "source": self.source,
            "order": self.order,
            "degrees": {str(k): v for k, v in self.degrees.items()},
            "girth": "acyclic" if self.girth is ACYCLIC else self.girth,
            "lambda_multiset": {str(k): v for k, v in self.lambda_multiset.items()},
            "is_egr": self.is_egr,
            "checks_ok": self.checks_ok,
            "error": self.error,
        }


@dataclass
class CorpusAudit:
    entries: list[AuditEntry]
    status: str  # "pass", "mismatch" or "data missing"
    expected: list[list[int]]
    observed: list[list[int]]
    notes: list[str] = field(default_factory=list)
    manifest: dict = field(default_factory=dict)

    @property
    def excluded_order(self) -> int | None:
        """Order ruled out for an egr graph by a passing audit, else None."""
        if self.status == "pass" and not any(e.is_egr for e in self.entries):
            return self.manifest.get("order")
        return None

    def to_dict(self):
        return {
            "status": self.status,
            "expected_lambda_value_sets": self.expected,
            "observed_lambda_value_sets": self.observed,
            "excluded_order": self.excluded_order,
            "entries": [e.to_dict() for e in self.entries],
            "notes": self.notes,
        }


def _audit_graph(source, G, manifest, threads):
    entry = AuditEntry(source=source, order=G.n)
    try:
        rep = is_egr(G, threads=threads)
    except EgrError as exc:
        entry.error = str(exc)
        return entry
    entry.degrees = rep.degrees
    entry.girth = rep.g
    entry.lambda_multiset = rep.lambda_multiset
    entry.is_egr = rep.is_egr
    entry.checks_ok = (
        G.n == manifest.get("order", G.n)
        and list(rep.degrees) == [manifest.get("degree", next(iter(rep.degrees)))]
        and rep.g == manifest.get("girth", rep.g)
    )
    return entry


def audit_corpus(files: Iterable, manifest: dict | None = None, threads: int = 1) -> CorpusAudit:
    """Census every graph in `files` and compare λ value sets with the manifest.

    The comparison is as a multiset of value sets, so neither file order nor
    graph order inside a file matters.  Unreadable files become entries with
    an error and the audit carries on.
    """
    manifest = manifest if manifest is not None else load_manifest()
    expected = sorted(sorted(s) for s in manifest.get("lambda_value_sets", []))
    files = sorted(Path(f) for f in files)
    entries: list[AuditEntry] = []
    for path in files:
        try:
            graphs = read_graph_file(path)
        except (OSError, EgrError) as exc:
            entries.append(AuditEntry(source=str(path), error=str(exc)))
            continue
        for i, G in enumerate(graphs):
            entries.append(_audit_graph(f"{path}#{i + 1}", G, manifest, threads))
    observed = sorted(sorted(e.lambda_multiset) for e in entries if e.error is None)
    notes = []
    if not entries:
        status = "data missing"
        notes.append("no corpus graphs found; place graph6 files of the cages in the corpus directory")
    elif (
        observed == expected
        and all(e.error is None and e.checks_ok for e in entries)
        and len(entries) == manifest.get("expected_count", len(entries))
    ):
        status = "pass"
    else:
        status = "mismatch"
        for e in entries:
            if e.error:
                notes.append(f"{e.source}: {e.error}")
            elif not e.checks_ok:
                notes.append(f"{e.source}: order/degree/girth differ from manifest")
    return CorpusAudit(entries, status, expected, observed, notes, manifest)


def corpus_files(directory=None) -> list[Path]:
    """Graph files under `directory` (default: $EGR_CORPUS_DIR); [] if absent."""
    directory = directory or os.environ.get(CORPUS_ENV)
    if not directory:
        return []
    d = Path(directory)
    if not d.is_dir():
        return []
    return sorted(p for p in d.iterdir() if p.is_file() and p.suffix.lower() in (".g6", ".graph6", ".adj", ".txt"))
