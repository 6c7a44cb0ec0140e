"""Per-edge counts of g-cycles and the edge-girth-regularity verdict."""
from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import DomainError, ParameterError
from .graph import ACYCLIC, Graph, girth


def _paths_by_endpoint(adj, start, banned, length):
    """Simple paths with `length` edges from `start` that never touch `banned`.

    Returns {endpoint: [mask, ...]} where each mask is the bitset of the
    path's vertices other than the endpoint.
    """
    out = defaultdict(list)
    stack = [(start, 1 << start, 0)]
    while stack:
        x, mask, depth = stack.pop()
        for y in adj[x]:
            if y == banned or (mask >> y) & 1:
                continue
            if depth + 1 == length:
                out[y].append(mask)
            else:
                stack.append((y, mask | (1 << y), depth + 1))
    return out


def _edge_cycle_count(adj, u, v, g):
    # A g-cycle through uv is u, v, x1..w..y1, u: a path of `a` edges out of
    # v and one of `b` edges out of u that meet at w and are otherwise disjoint.
    a = (g - 1) // 2
    b = g - 1 - a
    left = _paths_by_endpoint(adj, v, u, a)
    right = _paths_by_endpoint(adj, u, v, b)
    count = 0
    for w, lmasks in left.items():
        rmasks = right.get(w)
        if not rmasks:
            continue
        for lm in lmasks:
            for rm in rmasks:
                if not lm & rm:
                    count += 1
    return count


def _census_chunk(adj, g, edges):
    return [_edge_cycle_count(adj, u, v, g) for u, v in edges]


def cycle_census(G: Graph, g: int, threads: int = 1) -> dict[tuple[int, int], int]:
    """Number of distinct simple g-cycles through each edge.

    Keys are the edges (u, v), u < v, in ``G.edges()`` order.  A cycle is an
    edge set, so direction and starting point do not matter.  With
    ``threads > 1`` edges are split across worker processes; the result does
    not depend on the worker count.
    """
    if g < 3:
        raise ParameterError("cycle length must be at least 3")
    edges = G.edges()
    if threads <= 1 or len(edges) < 2 * threads:
        counts = _census_chunk(G.adj, g, edges)
    else:
        size = -(-len(edges) // threads)
        chunks = [edges[i : i + size] for i in range(0, len(edges), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_census_chunk, [G.adj] * len(chunks), [g] * len(chunks), chunks)
            counts = [c for part in parts for c in part]
    return dict(zip(edges, counts))


def enumerate_cycles(G: Graph, g: int):
    """Yield every simple g-cycle once, as a vertex tuple.

    Canonical form: the smallest vertex comes first and its smaller
    neighbour on the cycle comes second.
    """
    adj = G.adj
    for s in range(G.n):
        path = [s]

        def extend():
            x = path[-1]
            if len(path) == g:
                if G.has_edge(x, s) and path[1] < x:
                    yield tuple(path)
                return
            for y in adj[x]:
                if y > s and y not in path:
                    path.append(y)
                    yield from extend()
                    path.pop()

        yield from extend()


def cycle_census_oracle(G: Graph, g: int) -> dict[tuple[int, int], int]:
    """Reference census by global cycle enumeration; meant for small graphs."""
    if g < 3:
        raise ParameterError("cycle length must be at least 3")
    counts = dict.fromkeys(G.edges(), 0)
    for cyc in enumerate_cycles(G, g):
        for i in range(g):
            u, v = cyc[i], cyc[(i + 1) % g]
            counts[(u, v) if u < v else (v, u)] += 1
    return counts


@dataclass(frozen=True)
class EgrReport:
    v: int
    degrees: dict[int, int]
    g: object
    lambda_multiset: dict[int, int]
    is_egr: bool
    k: int | None = None
    lam: int | None = None
    cycle_total: int = field(default=0)

    @property
    def params(self):
        """(v, k, g, lambda) when the graph is egr, else None."""
        if not self.is_egr:
            return None
        return (self.v, self.k, self.g, self.lam)

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "degrees": {str(d): c for d, c in self.degrees.items()},
            "girth": self.g if self.g is not ACYCLIC else "acyclic",
            "lambda_multiset": {str(x): c for x, c in self.lambda_multiset.items()},
            "is_egr": self.is_egr,
            "k": self.k,
            "lambda": self.lam,
            "cycle_total": self.cycle_total,
        }

    def summary(self) -> str:
        if self.is_egr:
            return f"egr({self.v},{self.k},{self.g},{self.lam})"
        degs = ",".join(map(str, self.degrees))
        lams = ",".join(map(str, self.lambda_multiset))
        return f"not egr: v={self.v} degrees={{{degs}}} girth={self.g} lambda values={{{lams}}}"


def is_egr(G: Graph, threads: int = 1) -> EgrReport:
    """Girth, per-edge girth-cycle counts and the egr verdict for G."""
    if G.num_edges == 0:
        raise DomainError("graph has no edges")
    g = girth(G)
    if g is ACYCLIC:
        raise DomainError("graph is acyclic")
    counts = cycle_census(G, g, threads=threads)
    degrees = dict(sorted(Counter(G.degrees()).items()))
    lam_ms = dict(sorted(Counter(counts.values()).items()))
    total = sum(counts.values())
    if total % g:
        raise AssertionError("edge counts do not sum to a multiple of g")  # pragma: no cover
    regular = len(degrees) == 1
    single = len(lam_ms) == 1
    ok = regular and single
    return EgrReport(
        v=G.n,
        degrees=degrees,
        g=g,
        lambda_multiset=lam_ms,
        is_egr=ok,
        k=next(iter(degrees)) if regular else None,
        lam=next(iter(lam_ms)) if ok else None,
        cycle_total=total // g,
    )
