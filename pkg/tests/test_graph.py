import itertools
import json
from collections import Counter

import pytest

from vknot.diagram import connected_sum, crossing_switch, random_diagram
from vknot.errors import GraphFormatError, InvalidSite, SizeLimit, UnknownVertex
from vknot.graph import (
    IntersectionGraph,
    OmegaKind,
    OmegaSite,
    apply_omega,
    build_intersection_graph,
    derive_omega3_prime,
    disjoint_union,
    enumerate_omega_sites,
    export_graph,
    graph_from_json,
    graphs_isomorphic,
    random_omega_site,
    vertex_index,
    vertex_switch,
)
from vknot.invariants import graph_writhe_polynomial, graphs_equivalent, writhe_polynomial
from vknot.moves import random_move, apply_move
from vknot.utils import make_rng

REMOVE_KINDS = (
    OmegaKind.OMEGA0_REMOVE,
    OmegaKind.OMEGA1_REMOVE,
    OmegaKind.OMEGA2_REMOVE,
    OmegaKind.OMEGA3,
    OmegaKind.OMEGA3_PRIME,
)


def test_trefoil_graph(trefoil):
    g = build_intersection_graph(trefoil)
    assert g.vertices == {1: 1, 2: 1}
    assert g.edges == [(1, 2)]
    assert vertex_index(g, 1) == -1
    assert vertex_index(g, 2) == 1
    assert g.next_id == 3


def test_export_formats(trefoil):
    g = build_intersection_graph(trefoil)
    assert export_graph(g, "json") == '{"vertices":{"1":1,"2":1},"edges":[[1,2]]}'
    dot = export_graph(g, "dot")
    assert 'v1 [label="1+", sign="+1"];' in dot
    assert "v1 -> v2;" in dot
    assert graph_from_json(export_graph(g)) == g
    with pytest.raises(ValueError):
        export_graph(g, "png")


def test_bad_graphs():
    with pytest.raises(GraphFormatError):
        IntersectionGraph({1: 1}, [(1, 1)])
    with pytest.raises(GraphFormatError):
        IntersectionGraph({1: 1}, [(1, 2)])
    with pytest.raises(GraphFormatError):
        IntersectionGraph({1: 2})
    with pytest.raises(GraphFormatError):
        graph_from_json(json.dumps({"vertices": {"1": 1}}))
    with pytest.raises(UnknownVertex):
        IntersectionGraph({1: 1}).sign(2)


def test_switch_commutes_with_graph():
    rng = make_rng(5)
    for seed in range(200):
        d = random_diagram(1 + seed % 10, seed)
        c = int(rng.choice(d.chord_ids))
        left = build_intersection_graph(crossing_switch(d, c))
        right = vertex_switch(build_intersection_graph(d), c)
        assert graphs_isomorphic(left, right)
        assert left == right


def test_connected_sum_is_disjoint_union():
    for seed in range(20):
        d1, d2 = random_diagram(seed % 6, seed), random_diagram(3, seed + 100)
        left = build_intersection_graph(connected_sum(d1, d2))
        right = disjoint_union(build_intersection_graph(d1), build_intersection_graph(d2))
        assert graphs_isomorphic(left, right)


def test_isomorphism():
    g = IntersectionGraph({1: 1, 2: -1, 3: 1}, [(1, 2), (2, 3), (2, 3)])
    relabelled = IntersectionGraph({7: 1, 5: -1, 9: 1}, [(9, 5), (5, 7), (5, 7)])
    assert graphs_isomorphic(g, relabelled)
    flipped = IntersectionGraph({1: 1, 2: 1, 3: 1}, [(1, 2), (2, 3), (2, 3)])
    assert not graphs_isomorphic(g, flipped)
    single = IntersectionGraph({1: 1, 2: -1, 3: 1}, [(1, 2), (2, 3), (3, 2)])
    assert not graphs_isomorphic(g, single)


def test_isomorphism_size_limit():
    big = IntersectionGraph({v: 1 for v in range(17)})
    with pytest.raises(SizeLimit):
        graphs_isomorphic(big, big)
    assert graphs_isomorphic(big, big, max_vertices=17)


def brute_force_isomorphic(g1, g2):
    v1, v2 = list(g1.vertices), list(g2.vertices)
    if len(v1) != len(v2):
        return False
    target = Counter(g2.edges)
    for image in itertools.permutations(v2):
        mapping = dict(zip(v1, image))
        if any(g1.sign(v) != g2.sign(mapping[v]) for v in v1):
            continue
        if Counter((mapping[a], mapping[b]) for a, b in g1.edges) == target:
            return True
    return False


def random_small_graph(rng):
    n = int(rng.integers(1, 7))
    vertices = {v: int(rng.choice([1, -1])) for v in range(1, n + 1)}
    edges = []
    for _ in range(int(rng.integers(0, 2 * n + 1))):
        if n < 2:
            break
        a, b = (int(x) for x in rng.choice(n, size=2, replace=False) + 1)
        edges.append((a, b))
    return IntersectionGraph(vertices, edges)


def shuffled_copy(g, rng, reverse_one=False):
    ids = list(g.vertices)
    labels = dict(zip(ids, (int(x) + 10 for x in rng.permutation(len(ids)))))
    edges = [(labels[a], labels[b]) for a, b in g.edges]
    if reverse_one and edges:
        a, b = edges.pop(int(rng.integers(0, len(edges))))
        edges.append((b, a))
    return IntersectionGraph({labels[v]: s for v, s in g.vertices.items()}, edges)


def test_isomorphism_agrees_with_brute_force():
    rng = make_rng(17)
    outcomes = set()
    for i in range(300):
        g1 = random_small_graph(rng)
        if i % 3 == 0:
            g2 = shuffled_copy(g1, rng)
        elif i % 3 == 1:
            g2 = shuffled_copy(g1, rng, reverse_one=True)
        else:
            g2 = random_small_graph(rng)
        expected = brute_force_isomorphic(g1, g2)
        assert graphs_isomorphic(g1, g2) == expected, (g1, g2)
        outcomes.add(expected)
    assert outcomes == {True, False}


def test_omega1_and_omega2_ids(trefoil):
    g = build_intersection_graph(trefoil)
    g1 = apply_omega(g, OmegaSite(OmegaKind.OMEGA1_ADD, sign=-1))
    assert g1.vertices[3] == -1
    g2 = apply_omega(g1, OmegaSite(OmegaKind.OMEGA1_REMOVE, (3,)))
    assert g2 == g
    assert g2.next_id == 4

    add = OmegaSite(OmegaKind.OMEGA2_ADD, sign=1, neighbors=((1, "in"), (2, "out")))
    g3 = apply_omega(g2, add)
    assert g3.vertices[4] == 1 and g3.vertices[5] == -1
    assert g3.multiplicity(1, 4) == 1 and g3.multiplicity(5, 2) == 1
    assert OmegaSite(OmegaKind.OMEGA2_REMOVE, (4, 5)) in enumerate_omega_sites(g3, OmegaKind.OMEGA2_REMOVE)
    assert apply_omega(g3, OmegaSite(OmegaKind.OMEGA2_REMOVE, (4, 5))) == g


def test_omega0(trefoil):
    g = build_intersection_graph(trefoil)
    g1 = apply_omega(g, OmegaSite(OmegaKind.OMEGA0_ADD, (1, 2)))
    assert g1.multiplicity(1, 2) == 2 and g1.multiplicity(2, 1) == 1
    assert graph_writhe_polynomial(g1) == graph_writhe_polynomial(g)
    assert apply_omega(g1, OmegaSite(OmegaKind.OMEGA0_REMOVE, (1, 2))) == g


def test_invalid_omega_sites(trefoil):
    g = build_intersection_graph(trefoil)
    with pytest.raises(InvalidSite):
        apply_omega(g, OmegaSite(OmegaKind.OMEGA1_REMOVE, (1,)))
    with pytest.raises(InvalidSite):
        apply_omega(g, OmegaSite(OmegaKind.OMEGA0_REMOVE, (1, 2)))
    with pytest.raises(InvalidSite):
        apply_omega(g, OmegaSite(OmegaKind.OMEGA2_REMOVE, (1, 2)))
    with pytest.raises(InvalidSite):
        apply_omega(g, OmegaSite(OmegaKind.OMEGA1_REMOVE, (8,)))


def test_every_enumerated_site_keeps_the_polynomial():
    for seed in range(30):
        g = build_intersection_graph(random_diagram(2 + seed % 5, seed))
        w = graph_writhe_polynomial(g)
        for kind in OmegaKind:
            for site in enumerate_omega_sites(g, kind):
                assert graph_writhe_polynomial(apply_omega(g, site)) == w, site


def test_omega_site_dict_round_trip():
    site = OmegaSite(OmegaKind.OMEGA3_PRIME, (3, 1, 2), edges=((1, 3), (2, 1)))
    assert OmegaSite.from_dict(json.loads(json.dumps(site.to_dict()))) == site


def test_derived_omega3_prime_matches_direct_move():
    rng = make_rng(17)
    found = 0
    seed = 0
    while found < 50 and seed < 2000:
        g = build_intersection_graph(random_diagram(4 + seed % 4, seed))
        seed += 1
        sites = enumerate_omega_sites(g, OmegaKind.OMEGA3_PRIME)
        if not sites:
            continue
        site = sites[int(rng.integers(0, len(sites)))]
        direct = apply_omega(g, site)
        derived, steps = derive_omega3_prime(g, site)
        assert [s.kind for s in steps] == [OmegaKind.OMEGA2_ADD, OmegaKind.OMEGA3, OmegaKind.OMEGA2_REMOVE]
        assert graphs_isomorphic(derived, direct)
        found += 1
    assert found == 50


def test_derive_needs_omega3_prime(trefoil):
    with pytest.raises(InvalidSite):
        derive_omega3_prime(build_intersection_graph(trefoil), OmegaSite(OmegaKind.OMEGA3, (1, 2, 3)))


def test_graph_equivalence_matches_polynomials():
    rng = make_rng(3)
    for seed in range(200):
        d1 = random_diagram(seed % 7, seed)
        if seed % 2:
            d2 = d1
            for _ in range(3):
                site = random_move(d2, rng, max_chords=d1.n + 2)
                d2 = apply_move(d2, site) if site is not None else d2
        else:
            d2 = random_diagram(seed % 5, seed + 7)
        g1, g2 = build_intersection_graph(d1), build_intersection_graph(d2)
        expected = writhe_polynomial(d1) == writhe_polynomial(d2)
        assert graphs_equivalent(g1, g2) == expected
        graphs = [g1, g2]
        for _ in range(20):
            side = int(rng.integers(0, 2))
            kind = OmegaKind(str(rng.choice([k.value for k in OmegaKind])))
            site = random_omega_site(graphs[side], rng, kind)
            if site is not None:
                graphs[side] = apply_omega(graphs[side], site)
        assert graphs_equivalent(*graphs) == expected


def test_random_omega_site_is_seeded(p2):
    g = build_intersection_graph(p2)
    assert random_omega_site(g, 4, OmegaKind.OMEGA2_ADD) == random_omega_site(g, 4, OmegaKind.OMEGA2_ADD)
    assert random_omega_site(IntersectionGraph({}), 0, OmegaKind.OMEGA0_ADD) is None
