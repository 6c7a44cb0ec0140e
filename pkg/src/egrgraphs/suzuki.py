"""The Suzuki coset graph on circles of the Suzuki-Tits ovoid.

Coordinates: the ovoid in PG(3, q), q = 2^(2e+1), is
{(1:0:0:0)} ∪ {(ab + a^(σ+2) + b^σ : b : a : 1)} with σ(x) = x^(2^(e+1)).
Group elements are permutations of ovoid point indices stored as tuples
p with p[i] the image of i; ``compose(g, h)`` applies g first, then h.

Only q = 8 is enumerated (|Sz(8)| = 29120).  Every convention is backed
by an assertion on a known group-theoretic count, so a wrong choice fails
loudly instead of producing a different graph.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import InvariantError, ParameterError, ResourceError
from .field import Field, field_create, suzuki_exponent
from .graph import Graph

ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class OvoidPoint:
    coords: tuple[int, int, int, int]
    index: int


@dataclass(frozen=True)
class Circle:
    points: frozenset
    nucleus: int


def _suzuki_field(q: int) -> tuple[Field, int]:
    try:
        f = field_create(q)
    except ParameterError:
        raise ParameterError(f"q={q} is not of the form 2^(2e+1), e >= 1") from None
    return f, suzuki_exponent(f)


def suzuki_order(q: int) -> int:
    return q * q * (q * q + 1) * (q - 1)


def _normalize(f: Field, v):
    last = max(i for i in range(4) if v[i])
    inv = f.inv(v[last])
    return tuple(f.mul(c, inv) for c in v)


def _matvec(f: Field, M, v):
    return tuple(reduce(f.add, (f.mul(M[i][j], v[j]) for j in range(4)), 0) for i in range(4))


def ovoid(q: int) -> list[OvoidPoint]:
    """q^2 + 1 normalized points; index 0 is (1:0:0:0), then (a, b) row-major."""
    f, s = _suzuki_field(q)
    pts = [(1, 0, 0, 0)]
    for a in range(q):
        for b in range(q):
            z = f.add(f.add(f.mul(a, b), f.mul(f.pow(a, s), f.mul(a, a))), f.pow(b, s))
            pts.append((z, b, a, 1))
    out = [OvoidPoint(_normalize(f, p), i) for i, p in enumerate(pts)]
    if len({p.coords for p in out}) != q * q + 1:
        raise InvariantError("ovoid points are not distinct")
    return out


def unipotent(f: Field, s: int, c: int, d: int):
    """Matrix of (a, b) -> (a + c, b + d + c^σ a) on ovoid coordinates."""
    cs = f.pow(c, s)
    return (
        (1, c, f.add(d, f.mul(cs, c)), f.add(f.add(f.mul(c, d), f.mul(cs, f.mul(c, c))), f.pow(d, s))),
        (0, 1, cs, d),
        (0, 0, 1, c),
        (0, 0, 0, 1),
    )


def torus(f: Field, s: int, k: int):
    """diag(k^(σ+2), k^(σ+1), k, 1): (a, b) -> (k a, k^(σ+1) b)."""
    ks = f.pow(k, s)
    return (
        (f.mul(ks, f.mul(k, k)), 0, 0, 0),
        (0, f.mul(ks, k), 0, 0),
        (0, 0, k, 0),
        (0, 0, 0, 1),
    )


INVOLUTION = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))


def suzuki_generators(q: int):
    """4x4 matrices over GF(q) (acting on column vectors) generating Sz(q)."""
    f, s = _suzuki_field(q)
    return [unipotent(f, s, 1, 0), unipotent(f, s, 0, 1), torus(f, s, f.generator), INVOLUTION]


def matrix_permutation(q: int, M, points=None) -> tuple[int, ...]:
    """Permutation of ovoid indices induced by M; raises if M moves the ovoid."""
    f, _ = _suzuki_field(q)
    points = points or ovoid(q)
    where = {p.coords: p.index for p in points}
    out = []
    for p in points:
        img = _normalize(f, _matvec(f, M, p.coords))
        if img not in where:
            raise InvariantError(f"generator maps {p.coords} off the ovoid")
        out.append(where[img])
    return tuple(out)


def compose(g, h):
    """Apply g, then h."""
    return tuple(h[x] for x in g)


def inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def _check_enumerable(q):
    _suzuki_field(q)
    if q > ENUMERATION_LIMIT:
        raise ResourceError(
            f"Sz({q}) has {suzuki_order(q)} elements; enumeration is limited to q <= {ENUMERATION_LIMIT}"
        )


@lru_cache(maxsize=None)
def enumerate_group(q: int) -> tuple[tuple[int, ...], ...]:
    """All elements of Sz(q) as ovoid permutations, identity first (BFS order)."""
    _check_enumerable(q)
    points = ovoid(q)
    gens = [matrix_permutation(q, M, points) for M in suzuki_generators(q)]
    identity = tuple(range(len(points)))
    seen = {identity}
    order = [identity]
    frontier = deque([identity])
    while frontier:
        g = frontier.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                order.append(h)
                frontier.append(h)
    if len(order) != suzuki_order(q):
        raise InvariantError(f"generated group has order {len(order)}, expected {suzuki_order(q)}")
    return tuple(order)


def orbits(n, elements):
    """Orbits of a list of permutations (a subgroup) on range(n)."""
    seen = set()
    out = []
    for x in range(n):
        if x in seen:
            continue
        orb = sorted({g[x] for g in elements})
        seen.update(orb)
        out.append(orb)
    return out


def _planes(f: Field):
    """Normalized dual coordinates of all q^3 + q^2 + q + 1 planes."""
    q = f.q
    out = []
    for v in itertools.product(range(q), repeat=4):
        if any(v) and _normalize(f, v) == v:
            out.append(v)
    return out


def _dot(f, u, v):
    return reduce(f.add, (f.mul(a, b) for a, b in zip(u, v)), 0)


@dataclass(frozen=True)
class SuzukiGeometry:
    q: int
    points: tuple
    group: tuple
    circles: tuple          # Circle, sorted by sorted point tuple
    tangent_planes: int
    secant_planes: int
    base_stabilizer: tuple  # setwise stabilizer of circles[0]
    stabilizer_orbits: tuple

    def circle_index(self):
        return {c.points: i for i, c in enumerate(self.circles)}


@lru_cache(maxsize=None)
def suzuki_geometry(q: int) -> SuzukiGeometry:
    """Ovoid, group, plane classification and nucleus-labelled circles."""
    _check_enumerable(q)
    f, _ = _suzuki_field(q)
    points = tuple(ovoid(q))
    group = enumerate_group(q)
    sections = []
    tangent = 0
    for plane in _planes(f):
        sec = frozenset(p.index for p in points if _dot(f, plane, p.coords) == 0)
        if len(sec) == 1:
            tangent += 1
        elif len(sec) == q + 1:
            sections.append(sec)
        else:
            raise InvariantError(f"plane {plane} meets the ovoid in {len(sec)} points")
    if tangent != q * q + 1 or len(sections) != q * (q * q + 1):
        raise InvariantError(f"plane classification {tangent} tangent / {len(sections)} secant")
    sections.sort(key=lambda c: sorted(c))
    c0 = sections[0]
    stab = tuple(g for g in group if frozenset(g[x] for x in c0) == c0)
    if len(stab) != q * (q - 1):
        raise InvariantError(f"circle stabilizer has order {len(stab)}, expected {q * (q - 1)}")
    orbs = orbits(len(points), stab)
    fixed = [o[0] for o in orbs if len(o) == 1]
    if len(fixed) != 1 or fixed[0] not in c0:
        raise InvariantError("circle stabilizer does not fix a unique point of the circle")
    n0 = fixed[0]
    nucleus: dict[frozenset, int] = {}
    for g in group:
        img = frozenset(g[x] for x in c0)
        nx = g[n0]
        prev = nucleus.setdefault(img, nx)
        if prev != nx:
            raise InvariantError("nucleus transport is inconsistent")
    if set(nucleus) != set(sections):
        raise InvariantError("group is not transitive on circles")
    circles = tuple(Circle(c, nucleus[c]) for c in sections)
    return SuzukiGeometry(
        q=q,
        points=points,
        group=group,
        circles=circles,
        tangent_planes=tangent,
        secant_planes=len(sections),
        base_stabilizer=stab,
        stabilizer_orbits=tuple(sorted((tuple(o) for o in orbs), key=len)),
    )


def circles_with_nuclei(q: int) -> list[Circle]:
    return list(suzuki_geometry(q).circles)


def direct_nucleus(geom: SuzukiGeometry, circle: frozenset) -> int:
    """Nucleus recomputed from scratch as the fixed point of the circle's stabilizer."""
    stab = [g for g in geom.group if frozenset(g[x] for x in circle) == circle]
    fixed = [x for x in range(len(geom.points)) if all(g[x] == x for g in stab)]
    if len(fixed) != 1:
        raise InvariantError("stabilizer fixes more than one point")
    return fixed[0]


def suzuki_graph(q: int) -> Graph:
    """Circles joined when each one's nucleus is a non-nucleus point of the other."""
    geom = suzuki_geometry(q)
    by_pair: dict[tuple[int, int], int] = {}
    for i, c in enumerate(geom.circles):
        for y in c.points:
            if y != c.nucleus:
                if (c.nucleus, y) in by_pair:
                    raise InvariantError(f"two circles with nucleus {c.nucleus} contain {y}")
                by_pair[(c.nucleus, y)] = i
    npts = len(geom.points)
    if len(by_pair) != npts * (npts - 1):
        raise InvariantError("not every ordered point pair lies on a nucleus circle")
    edges = set()
    for x in range(npts):
        for y in range(x + 1, npts):
            u, v = by_pair[(x, y)], by_pair[(y, x)]
            if u == v:
                raise InvariantError("self-loop in Suzuki graph")
            e = (min(u, v), max(u, v))
            if e in edges:
                raise InvariantError("multi-edge in Suzuki graph")
            edges.add(e)
    return Graph(len(geom.circles), sorted(edges))


@dataclass(frozen=True)
class CosetGraph:
    graph: Graph
    g1_order: int
    g2_order: int
    intersection_order: int
    g1_cosets: int
    g2_cosets: int
    chosen_point: int


def _right_cosets(subgroup, group, index):
    """Coset id per group element; cosets numbered by canonical minimum element."""
    owner = [-1] * len(group)
    reps = []
    for g in group:
        if owner[index[g]] >= 0:
            continue
        members = [index[compose(h, g)] for h in subgroup]
        cid = len(reps)
        for m in members:
            owner[m] = cid
        reps.append(min(group[m] for m in members))
    order = sorted(range(len(reps)), key=lambda i: reps[i])
    rank = {cid: r for r, cid in enumerate(order)}
    return [rank[c] for c in owner], len(reps)


def suzuki_graph_coset_oracle(q: int) -> CosetGraph:
    """Literal coset geometry: G1 = Stab(circle), G2 = Stab({nucleus, p})."""
    geom = suzuki_geometry(q)
    group = geom.group
    c0 = geom.circles[0]
    g1 = geom.base_stabilizer
    p = min(x for x in c0.points if x != c0.nucleus)
    pair = {c0.nucleus, p}
    g2 = tuple(g for g in group if {g[c0.nucleus], g[p]} == pair)
    g1set = set(g1)
    inter = [g for g in g2 if g in g1set]
    if len(g2) != 2 * (q - 1) or len(inter) != q - 1:
        raise InvariantError(f"|G2| = {len(g2)}, |G1 ∩ G2| = {len(inter)}")
    index = {g: i for i, g in enumerate(group)}
    c1, n1 = _right_cosets(g1, group, index)
    c2, n2 = _right_cosets(g2, group, index)
    ends: list[set[int]] = [set() for _ in range(n2)]
    for i in range(len(group)):
        ends[c2[i]].add(c1[i])
    edges = []
    for e in ends:
        if len(e) != 2:
            raise InvariantError(f"a G2-coset meets {len(e)} G1-cosets")
        edges.append(tuple(sorted(e)))
    if len(set(edges)) != len(edges):
        raise InvariantError("multi-edge in coset graph")
    return CosetGraph(Graph(n1, edges), len(g1), len(g2), len(inter), n1, n2, p)
