"""Explicit graphs: the biaffine incidence graph B_q and the 32-vertex graph H.

Vertex layout of B_q (fixed so that emitted graph6 is reproducible):
point (x, y) has index x*q + y, line [m, b] has index q*q + m*q + b, where
x, y, m, b are field element indices.  Point (x, y) lies on line [m, b]
iff y = m*x + b.
"""
from __future__ import annotations

from importlib import resources

from .errors import ParameterError
from .field import Field, field_create
from .graph import Graph


def point_index(q: int, x: int, y: int) -> int:
    return x * q + y


def line_index(q: int, m: int, b: int) -> int:
    return q * q + m * q + b


def biaffine_labels(q: int) -> list[str]:
    pts = [f"({x},{y})" for x in range(q) for y in range(q)]
    lines = [f"[{m},{b}]" for m in range(q) for b in range(q)]
    return pts + lines


def _biaffine_edges(f: Field):
    q = f.q
    for x in range(q):
        for y in range(q):
            for m in range(q):
                b = f.sub(y, f.mul(m, x))
                yield point_index(q, x, y), line_index(q, m, b)


def biaffine(q: int) -> Graph:
    """Incidence graph B_q of the biaffine plane over GF(q): 2q^2 vertices, q-regular."""
    if q < 2:
        raise ParameterError("q must be a prime power >= 2")
    f = field_create(q)
    return Graph(2 * q * q, _biaffine_edges(f), labels=biaffine_labels(q))


def biaffine_translation(q: int, a: int, b: int) -> list[int]:
    """Vertex permutation of tau_(a,b): (x,y) -> (x+a, y+b), [m,c] -> [m, c+b-m*a].

    The line rule is the unique one keeping incidence: if y = m*x + c then
    y+b = m*(x+a) + (c + b - m*a).
    """
    f = field_create(q)
    if not (0 <= a < q and 0 <= b < q):
        raise ParameterError(f"({a}, {b}) are not elements of GF({q})")
    perm = [0] * (2 * q * q)
    for x in range(q):
        for y in range(q):
            perm[point_index(q, x, y)] = point_index(q, f.add(x, a), f.add(y, b))
    for m in range(q):
        shift = f.sub(b, f.mul(m, a))
        for c in range(q):
            perm[line_index(q, m, c)] = line_index(q, m, f.add(c, shift))
    return perm


# GF(4) with modulus x^2 + x + 1: indices 0, 1, 2 = alpha, 3 = alpha^2.
ALPHA = 2
ALPHA2 = 3


def phi_alpha() -> list[int]:
    """Point/line swap on 32 vertices: (i,j) -> [i, alpha*j], [i,j] -> (alpha*i, alpha*j).

    This preserves incidence of B_4.  It does not preserve the line half of
    the matching in special32(): [j,0][j,alpha] goes to (alpha*j,0)(alpha*j,alpha^2).
    """
    f = field_create(4)
    perm = [0] * 32
    for i in range(4):
        for j in range(4):
            perm[point_index(4, i, j)] = line_index(4, i, f.mul(ALPHA, j))
            perm[line_index(4, i, j)] = point_index(4, f.mul(ALPHA, i), f.mul(ALPHA, j))
    return perm


def special32_matching() -> list[tuple[int, int]]:
    """The 16 extra edges: (i,0)(i,1), (i,a)(i,a^2), [j,0][j,a], [j,1][j,a^2]."""
    out = []
    for i in range(4):
        out.append((point_index(4, i, 0), point_index(4, i, 1)))
        out.append((point_index(4, i, ALPHA), point_index(4, i, ALPHA2)))
    for j in range(4):
        out.append((line_index(4, j, 0), line_index(4, j, ALPHA)))
        out.append((line_index(4, j, 1), line_index(4, j, ALPHA2)))
    return out


def special32() -> Graph:
    """B_4 plus the matching above: 5-regular on 32 vertices, girth 5."""
    f = field_create(4)
    edges = list(_biaffine_edges(f)) + special32_matching()
    return Graph(32, edges, labels=biaffine_labels(4))


def appendix_fixture_text() -> str:
    """The 32-vertex adjacency list exactly as printed (1-based, Magma syntax)."""
    return resources.files("egrgraphs").joinpath("data/special32_appendix.txt").read_text()


def special32_appendix() -> Graph:
    """Graph parsed from the embedded appendix adjacency list."""
    from .ingest import parse_adjlist

    return parse_adjlist(appendix_fixture_text())
