import itertools

import pytest

from egrgraphs.automorphism import (
    are_isomorphic,
    automorphism_group_order,
    is_automorphism,
    vertex_orbits,
)
from egrgraphs.census import cycle_census, cycle_census_oracle, enumerate_cycles, is_egr
from egrgraphs.constructions import (
    biaffine,
    biaffine_translation,
    line_index,
    phi_alpha,
    point_index,
    special32,
    special32_appendix,
    special32_matching,
)
from egrgraphs.errors import ParameterError
from egrgraphs.field import field_create
from egrgraphs.graph import Graph, girth

ALPHA, ALPHA2 = 2, 3


def test_biaffine_q3_is_pappus(graph_named):
    G = biaffine(3)
    assert is_egr(G).params == (18, 3, 6, 4)
    assert are_isomorphic(G, graph_named("pappus"))


def test_biaffine_q2_is_an_8_cycle(graph_named):
    G = biaffine(2)
    assert G.n == 8 and set(G.degrees()) == {2}
    assert girth(G) == 8 and G.is_connected()
    assert are_isomorphic(G, graph_named("C6").__class__(8, [(i, (i + 1) % 8) for i in range(8)]))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_biaffine_lambda_formula(q):
    rep = is_egr(biaffine(q))
    assert rep.params == (2 * q * q, q, 6, (q - 1) ** 2 * (q - 2))


@pytest.mark.parametrize("q, lam", [(4, 18), (5, 48)])
def test_biaffine_lambda_against_oracle(q, lam):
    G = biaffine(q)
    assert set(cycle_census_oracle(G, 6).values()) == {lam}


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_biaffine_is_bipartite_by_index_range(q):
    G = biaffine(q)
    half = q * q
    assert all((u < half) != (v < half) for u, v in G.edges())


@pytest.mark.parametrize("q", [3, 4, 5])
def test_biaffine_blocks_at_distance_four(q):
    G = biaffine(q)
    for x in range(q):
        for start in (point_index(q, x, 0), line_index(q, x, 0)):
            dist = G.distances_from(start)
            block = range(start, start + q)
            assert all(dist[v] == 4 for v in block if v != start)


def test_biaffine_incidence_rule():
    f = field_create(5)
    G = biaffine(5)
    for x, y, m, b in itertools.product(range(5), repeat=4):
        on = y == f.add(f.mul(m, x), b)
        assert G.has_edge(point_index(5, x, y), line_index(5, m, b)) == on


def test_biaffine_invalid_q():
    with pytest.raises(ParameterError):
        biaffine(6)
    with pytest.raises(ParameterError):
        biaffine(1)


def test_translation_identity_and_q3_rule():
    assert biaffine_translation(3, 0, 0) == list(range(18))
    tau = biaffine_translation(3, 1, 0)
    # point blocks P_x shift cyclically
    for x in range(3):
        assert {tau[point_index(3, x, y)] for y in range(3)} == {point_index(3, (x + 1) % 3, y) for y in range(3)}
    # line [m, c] -> [m, c - m]; each L_m fixed setwise
    for m, c in itertools.product(range(3), repeat=2):
        assert tau[line_index(3, m, c)] == line_index(3, m, (c - m) % 3)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_translations_are_automorphisms(q):
    G = biaffine(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert is_automorphism(G, biaffine_translation(q, a, b))


def test_translations_preserve_special32():
    H = special32()
    for a, b in itertools.product(range(4), repeat=2):
        assert is_automorphism(H, biaffine_translation(4, a, b))


def test_phi_alpha_values():
    phi = phi_alpha()
    assert phi[point_index(4, 0, 0)] == line_index(4, 0, 0)
    assert phi[point_index(4, 1, 1)] == line_index(4, 1, ALPHA)
    assert sorted(phi) == list(range(32))


def test_phi_alpha_is_automorphism_of_b4():
    assert is_automorphism(biaffine(4), phi_alpha())


@pytest.mark.xfail(strict=True, reason="the printed swap moves [j,0][j,α] to (αj,0)(αj,α²), which is not a matching edge")
def test_phi_alpha_is_automorphism_of_special32():
    assert is_automorphism(special32(), phi_alpha())


def test_orbit_of_translations_and_phi():
    gens = [biaffine_translation(4, a, b) for a, b in itertools.product(range(4), repeat=2)] + [phi_alpha()]
    assert vertex_orbits(32, gens) == [list(range(32))]


def test_matching_is_perfect_and_disjoint_from_b4():
    M = special32_matching()
    assert sorted(v for e in M for v in e) == list(range(32))
    B = biaffine(4)
    assert not any(B.has_edge(u, v) for u, v in M)


def test_special32_parameters():
    H = special32()
    assert set(H.degrees()) == {5}
    assert girth(H) == 5
    assert is_egr(H).params == (32, 5, 5, 12)
    assert cycle_census(H, 5) == cycle_census_oracle(H, 5)


def test_special32_listed_pentagon():
    H = special32()
    cyc = [point_index(4, 0, 0), point_index(4, 0, 1), line_index(4, 1, 1), point_index(4, 1, 0), line_index(4, 0, 0)]
    assert all(H.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))


def test_every_pentagon_has_exactly_one_matching_edge():
    H = special32()
    M = {frozenset(e) for e in special32_matching()}
    for cyc in enumerate_cycles(H, 5):
        tagged = sum(frozenset((cyc[i], cyc[(i + 1) % 5])) in M for i in range(5))
        assert tagged == 1


def test_appendix_fixture_parameters():
    F = special32_appendix()
    assert is_egr(F).params == (32, 5, 5, 12)
    assert automorphism_group_order(F) == 48


def test_automorphism_orders_against_brute_force():
    from test_automorphism import brute_force_automorphisms

    # H from the printed matching and the appendix list are different graphs
    H, F = special32(), special32_appendix()
    assert automorphism_group_order(H) == brute_force_automorphisms(H) == 1920
    assert automorphism_group_order(F) == brute_force_automorphisms(F) == 48
    assert not are_isomorphic(H, F)


def _pentagon_covering_matchings(G):
    """Perfect matchings meeting every pentagon of G in exactly one edge."""
    pents = [frozenset(tuple(sorted((c[i], c[(i + 1) % 5]))) for i in range(5)) for c in enumerate_cycles(G, 5)]
    by_edge = {e: [j for j, p in enumerate(pents) if e in p] for e in G.edges()}
    found = []

    def extend(chosen, covered, used):
        if len(covered) == len(pents):
            if len(used) == G.n:
                found.append(list(chosen))
            return
        j = min(set(range(len(pents))) - covered)
        for e in pents[j]:
            if e[0] in used or e[1] in used or covered.intersection(by_edge[e]):
                continue
            extend(chosen + [e], covered | set(by_edge[e]), used | set(e))

    extend([], set(), set())
    return found


@pytest.mark.parametrize(
    "build, count", [(special32, 5), (special32_appendix, 1)], ids=["printed", "appendix"]
)
def test_b4_plus_pentagon_covering_matching(build, count):
    G = build()
    found = _pentagon_covering_matchings(G)
    assert len(found) == count
    for m in found:
        rest = Graph(G.n, [e for e in G.edges() if e not in set(m)])
        assert are_isomorphic(rest, biaffine(4))
    if build is special32:
        assert sorted(special32_matching()) in [sorted(m) for m in found]
