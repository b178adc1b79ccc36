"""
Local moves on intersection graphs.

omega0 adds or removes an antiparallel pair of edges (a bigon between two
chords), omega1 an isolated vertex, omega2 a pair of opposite-sign,
non-adjacent vertices with identical directed neighborhoods. omega3 and
omega3' toggle every pair of a vertex triple; omega3 works on triples of one
sign, omega3' on triples with one odd sign. Every move keeps the writhe
polynomial of the graph.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from ..errors import InvalidSite
from ..utils import check_sign, make_rng

logger = logging.getLogger(__name__)


class OmegaKind(str, Enum):
    OMEGA0_ADD = "w0_add"
    OMEGA0_REMOVE = "w0_remove"
    OMEGA1_ADD = "w1_add"
    OMEGA1_REMOVE = "w1_remove"
    OMEGA2_ADD = "w2_add"
    OMEGA2_REMOVE = "w2_remove"
    OMEGA3 = "w3"
    OMEGA3_PRIME = "w3_prime"


ADD_KINDS = (OmegaKind.OMEGA0_ADD, OmegaKind.OMEGA1_ADD, OmegaKind.OMEGA2_ADD)


@dataclass(frozen=True)
class OmegaSite:
    """
    Where and how to apply an omega move.

    vertices: selected existing vertices (pair for omega0/omega2, one vertex for
        omega1_remove, the triple for omega3/omega3', odd vertex first)
    sign: sign of the new vertex (omega1_add) or of the first new vertex (omega2_add)
    neighbors: omega2_add neighbor multiset as (vertex, "in" | "out") entries;
        "in" means an edge from the neighbor into each new vertex
    edges: omega3/omega3' orientation of every edge created in the triple
    """
    kind: OmegaKind
    vertices: tuple = ()
    sign: int = 1
    neighbors: tuple = ()
    edges: tuple = ()

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "vertices": list(self.vertices),
            "sign": self.sign,
            "neighbors": [list(n) for n in self.neighbors],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            OmegaKind(data["kind"]),
            tuple(data.get("vertices", ())),
            int(data.get("sign", 1)),
            tuple((int(v), str(d)) for v, d in data.get("neighbors", ())),
            tuple((int(a), int(b)) for a, b in data.get("edges", ())),
        )


def _pair_edges(g, u, w):
    return [(u, w)] * g.multiplicity(u, w) + [(w, u)] * g.multiplicity(w, u)


def _directed_neighborhood(g, v, exclude=()):
    return Counter(
        [(u, "in") for u in g.in_neighbors(v) if u not in exclude]
        + [(w, "out") for w in g.out_neighbors(v) if w not in exclude]
    )


def _triangle_contributions(signs, edges, triple):
    """Index contribution of the triangle edges to each vertex of the triple."""
    contrib = dict.fromkeys(triple, 0)
    for a, b in edges:
        contrib[b] += signs[a]
        contrib[a] -= signs[b]
    return contrib


def _triangle_kind(signs, triple):
    values = [signs[v] for v in triple]
    return OmegaKind.OMEGA3 if len(set(values)) == 1 else OmegaKind.OMEGA3_PRIME


def _order_triple(signs, triple):
    """omega3 triples sorted; omega3' triples with the odd-sign vertex first."""
    triple = sorted(triple)
    if _triangle_kind(signs, triple) is OmegaKind.OMEGA3:
        return tuple(triple)
    counts = Counter(signs[v] for v in triple)
    odd = next(v for v in triple if counts[signs[v]] == 1)
    return (odd,) + tuple(v for v in triple if v != odd)


def _triangle_sites(g, triple):
    signs = g.vertices
    pairs = list(itertools.combinations(triple, 2))
    existing = []
    empty = []
    for u, w in pairs:
        edges = _pair_edges(g, u, w)
        if len(edges) > 1:
            return []
        if edges:
            existing.extend(edges)
        else:
            empty.append((u, w))
    before = _triangle_contributions(signs, existing, triple)
    kind = _triangle_kind(signs, triple)
    ordered = _order_triple(signs, triple)
    sites = []
    for flips in itertools.product((False, True), repeat=len(empty)):
        created = tuple((w, u) if flip else (u, w) for (u, w), flip in zip(empty, flips))
        if _triangle_contributions(signs, created, triple) == before:
            sites.append(OmegaSite(kind, ordered, edges=created))
    return sites


def enumerate_omega_sites(g, kind, max_neighbors=1):
    """
    All applicable sites of one kind.

    Add kinds have unbounded site spaces; omega2_add is listed for neighbor
    multisets of at most max_neighbors entries.

    Args:
        g: IntersectionGraph
        kind: OmegaKind
        max_neighbors: Size bound for omega2_add neighbor multisets

    Returns:
        list: OmegaSite instances in a deterministic order
    """
    kind = OmegaKind(kind)
    signs = g.vertices
    vertices = list(signs)
    if kind is OmegaKind.OMEGA1_ADD:
        return [OmegaSite(kind, sign=s) for s in (1, -1)]
    if kind is OmegaKind.OMEGA1_REMOVE:
        return [OmegaSite(kind, (v,)) for v in vertices if g.degree(v) == 0]
    if kind is OmegaKind.OMEGA0_ADD:
        return [OmegaSite(kind, pair) for pair in itertools.combinations(vertices, 2)]
    if kind is OmegaKind.OMEGA0_REMOVE:
        return [
            OmegaSite(kind, (u, w))
            for u, w in itertools.combinations(vertices, 2)
            if g.multiplicity(u, w) and g.multiplicity(w, u)
        ]
    if kind is OmegaKind.OMEGA2_ADD:
        choices = [(v, d) for v in vertices for d in ("in", "out")]
        sites = []
        for size in range(max_neighbors + 1):
            for neighbors in itertools.combinations_with_replacement(choices, size):
                sites.extend(OmegaSite(kind, sign=s, neighbors=neighbors) for s in (1, -1))
        return sites
    if kind is OmegaKind.OMEGA2_REMOVE:
        return [
            OmegaSite(kind, (u, w))
            for u, w in itertools.combinations(vertices, 2)
            if _is_omega2_pair(g, u, w)
        ]
    sites = []
    for triple in itertools.combinations(vertices, 3):
        if _triangle_kind(signs, triple) is kind:
            sites.extend(_triangle_sites(g, triple))
    return sites


def _is_omega2_pair(g, u, w):
    if u == w or g.sign(u) != -g.sign(w) or g.adjacent(u, w):
        return False
    return _directed_neighborhood(g, u) == _directed_neighborhood(g, w)


def _fail(site, reason):
    raise InvalidSite(f"{site.kind.value} site {site.vertices}: {reason}")


def apply_omega(g, site):
    """
    Apply an omega move.

    Args:
        g: IntersectionGraph
        site: OmegaSite, re-validated against g

    Returns:
        IntersectionGraph: The rewritten graph; new vertices take ids from g.next_id

    Raises:
        InvalidSite: If the pattern is not present in g
    """
    kind = OmegaKind(site.kind)
    for v in site.vertices:
        if v not in g:
            _fail(site, f"vertex {v} is not in the graph")
    vertices = g.vertices
    edges = g.edges
    next_id = g.next_id
    logger.debug("apply %s at %s", kind.value, site.vertices)

    if kind is OmegaKind.OMEGA1_ADD:
        vertices[next_id] = check_sign(site.sign)
        return g.rebuild(vertices, edges, next_id + 1)

    if kind is OmegaKind.OMEGA1_REMOVE:
        (v,) = site.vertices
        if g.degree(v) != 0:
            _fail(site, "vertex is not isolated")
        del vertices[v]
        return g.rebuild(vertices, edges)

    if kind in (OmegaKind.OMEGA0_ADD, OmegaKind.OMEGA0_REMOVE):
        u, w = site.vertices
        if u == w:
            _fail(site, "omega0 needs two distinct vertices")
        if kind is OmegaKind.OMEGA0_ADD:
            return g.rebuild(vertices, edges + [(u, w), (w, u)])
        if not (g.multiplicity(u, w) and g.multiplicity(w, u)):
            _fail(site, "no antiparallel edge pair")
        edges.remove((u, w))
        edges.remove((w, u))
        return g.rebuild(vertices, edges)

    if kind is OmegaKind.OMEGA2_ADD:
        sign = check_sign(site.sign)
        first, second = next_id, next_id + 1
        vertices[first] = sign
        vertices[second] = -sign
        for v, direction in site.neighbors:
            if v not in g:
                _fail(site, f"neighbor {v} is not in the graph")
            for new in (first, second):
                if direction == "in":
                    edges.append((v, new))
                elif direction == "out":
                    edges.append((new, v))
                else:
                    _fail(site, f"bad neighbor direction {direction!r}")
        return g.rebuild(vertices, edges, next_id + 2)

    if kind is OmegaKind.OMEGA2_REMOVE:
        u, w = site.vertices
        if not _is_omega2_pair(g, u, w):
            _fail(site, "not an opposite-sign twin pair")
        for v in (u, w):
            del vertices[v]
        edges = [(a, b) for a, b in edges if a not in (u, w) and b not in (u, w)]
        return g.rebuild(vertices, edges)

    triple = tuple(site.vertices)
    if len(set(triple)) != 3:
        _fail(site, "needs three distinct vertices")
    if _triangle_kind(vertices, triple) is not kind:
        _fail(site, "sign pattern does not match the move")
    valid = {s.edges for s in _triangle_sites(g, triple)}
    if tuple(site.edges) not in valid and not _same_edges(site.edges, valid):
        _fail(site, "triangle rewrite would change a vertex index")
    pairs = set(frozenset(p) for p in itertools.combinations(triple, 2))
    edges = [e for e in edges if frozenset(e) not in pairs]
    return g.rebuild(vertices, edges + [tuple(e) for e in site.edges])


def _same_edges(edges, valid):
    target = Counter(tuple(e) for e in edges)
    return any(Counter(v) == target for v in valid)


def random_omega_site(g, rng, kind):
    """
    Draw one applicable site of the given kind, or None when there is none.

    Add kinds are sampled directly: omega2_add draws up to three neighbor
    entries (with repetition) and random directions.
    """
    rng = make_rng(rng)
    kind = OmegaKind(kind)
    vertices = list(g.vertices)
    if kind is OmegaKind.OMEGA1_ADD:
        return OmegaSite(kind, sign=int(rng.choice([1, -1])))
    if kind is OmegaKind.OMEGA0_ADD:
        if len(vertices) < 2:
            return None
        u, w = rng.choice(vertices, size=2, replace=False)
        return OmegaSite(kind, (int(u), int(w)))
    if kind is OmegaKind.OMEGA2_ADD:
        size = int(rng.integers(0, min(3, len(vertices)) + 1))
        neighbors = tuple(
            (int(rng.choice(vertices)), "in" if rng.integers(0, 2) else "out")
            for _ in range(size)
        )
        return OmegaSite(kind, sign=int(rng.choice([1, -1])), neighbors=neighbors)
    sites = enumerate_omega_sites(g, kind)
    if not sites:
        return None
    return sites[int(rng.integers(0, len(sites)))]


def derive_omega3_prime(g, site):
    """
    Realize an omega3' site by omega2_add, omega3 and omega2_remove.

    A twin pair (v1', u) is added where v1' copies the neighborhood v1 will
    have after the move and u, of the sign of v2 and v3, shares it. omega3 on
    (u, v2, v3) then gives u the old neighborhood of v1, so v1 and u cancel by
    omega2_remove, leaving v1' in place of v1.

    Args:
        g: IntersectionGraph
        site: OmegaSite of kind omega3'

    Returns:
        tuple: (resulting graph, [omega2_add, omega3, omega2_remove sites])

    Raises:
        InvalidSite: If the site is not a valid omega3' site of g
    """
    if OmegaKind(site.kind) is not OmegaKind.OMEGA3_PRIME:
        raise InvalidSite("derive_omega3_prime needs an omega3' site")
    apply_omega(g, site)
    v1, v2, v3 = _order_triple(g.vertices, site.vertices)
    created = {frozenset(e): tuple(e) for e in site.edges}

    neighbors = sorted(_directed_neighborhood(g, v1, exclude=(v2, v3)).elements())
    for vj in (v2, v3):
        edge = created.get(frozenset((v1, vj)))
        if edge is not None:
            neighbors.append((vj, "out" if edge[0] == v1 else "in"))
    add = OmegaSite(OmegaKind.OMEGA2_ADD, sign=g.sign(v1), neighbors=tuple(neighbors))
    g1 = apply_omega(g, add)
    u = g.next_id + 1

    triangle_edges = []
    for vj in (v2, v3):
        for a, b in _pair_edges(g, v1, vj):
            triangle_edges.append((u if a == v1 else a, u if b == v1 else b))
    edge = created.get(frozenset((v2, v3)))
    if edge is not None:
        triangle_edges.append(edge)
    triple = tuple(sorted((u, v2, v3)))
    middle = OmegaSite(OmegaKind.OMEGA3, triple, edges=tuple(triangle_edges))
    g2 = apply_omega(g1, middle)

    remove = OmegaSite(OmegaKind.OMEGA2_REMOVE, (v1, u))
    return apply_omega(g2, remove), [add, middle, remove]
