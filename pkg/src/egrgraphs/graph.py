"""Immutable simple undirected graphs on vertices 0..n-1."""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import ParameterError


class _Acyclic:
    """Girth of a graph without cycles.

    Deliberately not a number: comparing or adding it raises TypeError.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ACYCLIC"

    def __str__(self):
        return "acyclic"

    def __reduce__(self):
        return (_Acyclic, ())


ACYCLIC = _Acyclic()


class Graph:
    """Simple undirected graph; adjacency is a tuple of sorted neighbor tuples."""

    __slots__ = ("n", "adj", "labels", "_nbr_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ParameterError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ParameterError("one label per vertex required")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(sorted(s)) for s in nbrs))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_nbr_sets", tuple(frozenset(s) for s in nbrs))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]], labels=None) -> "Graph":
        """Build from neighbor lists; the lists must already be symmetric."""
        n = len(adj)
        sets = [set(a) for a in adj]
        for u, s in enumerate(sets):
            for v in s:
                if u not in sets[v]:
                    raise ParameterError(f"asymmetric adjacency: {v} in adj({u}) but {u} not in adj({v})")
        return cls(n, ((u, v) for u, s in enumerate(sets) for v in s if u < v), labels)

    def __getstate__(self):
        return (self.n, self.adj, self.labels)

    def __setstate__(self, state):
        n, adj, labels = state
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_nbr_sets", tuple(frozenset(a) for a in adj))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("relabeling must be a permutation of the vertices")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def distances_from(self, s: int) -> list[int]:
        """BFS distances from s; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def is_connected(self) -> bool:
        return self.n == 0 or min(self.distances_from(0)) >= 0

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def girth(G: Graph):
    """Length of a shortest cycle, or ACYCLIC.

    BFS from every vertex; a non-tree edge (x, y) seen from root s closes a
    closed walk of length d(x) + d(y) + 1 that contains a cycle no longer
    than that, and the minimum over all roots is attained exactly.
    """
    best = None
    n = G.n
    adj = G.adj
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if best is not None and 2 * dx >= best:
                break
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dx + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best
