"""Automorphisms, orbits and isomorphism testing for small graphs.

The search is individualization-refinement: colors start from degree and
BFS distance profile, are refined by neighbour-color multisets until stable,
and one vertex per level is individualized when that is not enough.  Two
graphs are always colored together (as a disjoint union) so that a color
means the same thing on both sides.
"""
from __future__ import annotations

from collections import Counter, deque
from typing import Sequence

from .errors import ParameterError, ResourceError
from .graph import Graph

AUT_LIMIT = 64
ISO_LIMIT = 1024


def is_automorphism(G: Graph, perm: Sequence[int]) -> bool:
    """True iff perm maps edges onto edges (and so non-edges onto non-edges)."""
    perm = list(perm)
    if sorted(perm) != list(range(G.n)):
        raise ParameterError("not a bijection on the vertex set")
    for u, v in G.edges():
        if not G.has_edge(perm[u], perm[v]):
            return False
    return True


def _check_perm(perm, n):
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ParameterError("generator is not a bijection on range(n)")


def vertex_orbits(n: int, gens: Sequence[Sequence[int]]) -> list[list[int]]:
    """Orbits of the group generated by `gens`, each sorted, ordered by minimum."""
    for p in gens:
        _check_perm(p, n)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for x in range(n):
            a, b = find(x), find(p[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits: dict[int, list[int]] = {}
    for x in range(n):
        orbits.setdefault(find(x), []).append(x)
    return [orbits[r] for r in sorted(orbits)]


def _orbit(x, gens):
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for p in gens:
            z = p[y]
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


# -- refinement ------------------------------------------------------------

def _initial_signature(G: Graph) -> list[tuple]:
    sigs = []
    for v in range(G.n):
        dist = G.distances_from(v)
        sigs.append((len(G.adj[v]), tuple(sorted(Counter(dist).items()))))
    return sigs


def _compress(sigs):
    table = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [table[s] for s in sigs]


def _refine(adj, colors):
    """Iterate neighbour-multiset refinement to a stable partition."""
    k = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        new = _compress(sigs)
        k_new = len(set(new))
        if k_new == k:
            return new
        colors, k = new, k_new


class _Pair:
    """Two graphs of equal order as one disjoint union, right side shifted by n."""

    def __init__(self, G1: Graph, G2: Graph, base1=None, base2=None):
        n = G1.n
        self.n = n
        self.G1, self.G2 = G1, G2
        self.adj = list(G1.adj) + [tuple(w + n for w in a) for a in G2.adj]
        base1 = base1 if base1 is not None else _initial_signature(G1)
        base2 = base2 if base2 is not None else _initial_signature(G2)
        self.base = _compress(list(base1) + list(base2))

    def individualize(self, colors, pairs):
        colors = list(colors)
        fresh = max(colors) + 1
        for i, (x, y) in enumerate(pairs):
            colors[x] = fresh + i
            colors[self.n + y] = fresh + i
        return colors

    def search(self, colors):
        """A bijection G1 -> G2 respecting `colors`, or None."""
        n = self.n
        colors = _refine(self.adj, colors)
        if Counter(colors[:n]) != Counter(colors[n:]):
            return None
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        big = [c for c, vs in cells.items() if len(vs) > 1]
        if not big:
            right = {colors[n + w]: w for w in range(n)}
            mapping = [right[colors[v]] for v in range(n)]
            return mapping if self._is_iso(mapping) else None
        target = min(big, key=lambda c: (len(cells[c]), c))
        x = cells[target][0]
        for y in range(n):
            if colors[n + y] != target:
                continue
            res = self.search(self.individualize(colors, [(x, y)]))
            if res is not None:
                return res
        return None

    def _is_iso(self, mapping):
        G1, G2 = self.G1, self.G2
        return all(G2.has_edge(mapping[u], mapping[v]) for u, v in G1.edges())


def automorphism_group_order(G: Graph, limit: int = AUT_LIMIT) -> int:
    """Exact |Aut(G)| through a stabilizer chain of individualized vertices."""
    if G.n > limit:
        raise ResourceError(f"automorphism search limited to n <= {limit}")
    if G.n == 0:
        return 1
    return _AutSearch(G).order()


class _AutSearch:
    def __init__(self, G):
        base = _initial_signature(G)
        self.G = G
        self.pair = _Pair(G, G, base, base)

    def _refined(self, prefix):
        p = self.pair
        return _refine(p.adj, p.individualize(p.base, [(x, x) for x in prefix]))

    def run(self):
        """Return the list of orbit sizes |x_i^{Aut_(x_1..x_{i-1})}|."""
        n = self.G.n
        prefix, cellsets = [], []
        while True:
            colors = self._refined(prefix)
            cells: dict[int, list[int]] = {}
            for v in range(n):
                cells.setdefault(colors[v], []).append(v)
            big = [c for c, vs in cells.items() if len(vs) > 1]
            if not big:
                break
            target = min(big, key=lambda c: (len(cells[c]), c))
            prefix.append(cells[target][0])
            cellsets.append(cells[target])
        gens: list[list[int]] = []
        sizes = []
        for i in range(len(prefix) - 1, -1, -1):
            x, cell = prefix[i], cellsets[i]
            fixed = [(z, z) for z in prefix[:i]]
            orbit = _orbit(x, gens)
            for y in cell:
                if y in orbit:
                    continue
                colors = self.pair.individualize(self.pair.base, fixed + [(x, y)])
                found = self.pair.search(colors)
                if found is not None:
                    gens.append(found)
                    orbit = _orbit(x, gens)
            sizes.append(len(orbit))
        self.generators = gens
        return sizes[::-1]

    def order(self):
        out = 1
        for s in self.run():
            out *= s
        return out


def automorphism_generators(G: Graph, limit: int = AUT_LIMIT) -> list[list[int]]:
    """Generators of Aut(G) found by the stabilizer-chain search."""
    if G.n > limit:
        raise ResourceError(f"automorphism search limited to n <= {limit}")
    s = _AutSearch(G)
    s.run()
    return s.generators


def find_isomorphism(G1: Graph, G2: Graph, limit: int = ISO_LIMIT):
    """A vertex map G1 -> G2 preserving edges, or None."""
    if max(G1.n, G2.n) > limit:
        raise ResourceError(f"isomorphism search limited to n <= {limit}")
    if G1.n != G2.n or G1.num_edges != G2.num_edges:
        return None
    if sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    if G1.n == 0:
        return []
    pair = _Pair(G1, G2)
    return pair.search(pair.base)


def are_isomorphic(G1: Graph, G2: Graph, limit: int = ISO_LIMIT) -> bool:
    return find_isomorphism(G1, G2, limit) is not None
