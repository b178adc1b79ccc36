"""
Intersection graph of a Gauss diagram: one signed vertex per chord, one
directed edge per crossing pair of chords.
"""
from collections import Counter

import networkx as nx

from ..diagram import sense_matrix
from ..errors import GraphFormatError, UnknownVertex
from ..utils import check_sign


class IntersectionGraph:
    """
    Immutable vertex-signed directed multigraph.

    Parallel edges are allowed, loops are not. Vertex ids handed out by moves
    come from next_id, which only grows, so removed ids are never reused.
    """

    __slots__ = ("_graph",)

    def __init__(self, vertices, edges=(), next_id=None):
        """
        Args:
            vertices: Mapping vertex id -> +1 / -1
            edges: Iterable of (from, to) pairs, repeated for parallel edges
            next_id: First id available for new vertices; defaults to max id + 1

        Raises:
            GraphFormatError: On loops, undeclared endpoints or bad signs
        """
        graph = nx.MultiDiGraph()
        for v, sign in sorted(dict(vertices).items()):
            try:
                graph.add_node(int(v), sign=check_sign(sign))
            except ValueError as exc:
                raise GraphFormatError(f"vertex {v}: {exc}") from exc
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if u not in graph or v not in graph:
                raise GraphFormatError(f"edge ({u}, {v}) uses an undeclared vertex")
            graph.add_edge(int(u), int(v))
        floor = max(graph.nodes, default=0) + 1
        graph.graph["next_id"] = floor if next_id is None else max(int(next_id), floor)
        self._graph = nx.freeze(graph)

    @property
    def vertices(self):
        return {v: data["sign"] for v, data in sorted(self._graph.nodes(data=True))}

    @property
    def edges(self):
        return sorted((u, v) for u, v in self._graph.edges())

    @property
    def next_id(self):
        return self._graph.graph["next_id"]

    def __contains__(self, v):
        return v in self._graph

    def __len__(self):
        return self._graph.number_of_nodes()

    def sign(self, v):
        self._require(v)
        return self._graph.nodes[v]["sign"]

    def in_neighbors(self, v):
        """In-neighbors of v, repeated once per parallel edge."""
        self._require(v)
        return sorted(u for u, _ in self._graph.in_edges(v))

    def out_neighbors(self, v):
        self._require(v)
        return sorted(w for _, w in self._graph.out_edges(v))

    def multiplicity(self, u, v):
        """Number of edges u -> v."""
        return self._graph.number_of_edges(u, v)

    def adjacent(self, u, v):
        return self.multiplicity(u, v) + self.multiplicity(v, u) > 0

    def degree(self, v):
        self._require(v)
        return self._graph.degree(v)

    def to_networkx(self):
        """Mutable copy of the underlying networkx MultiDiGraph."""
        return nx.MultiDiGraph(self._graph)

    def rebuild(self, vertices=None, edges=None, next_id=None):
        return IntersectionGraph(
            self.vertices if vertices is None else vertices,
            self.edges if edges is None else edges,
            self.next_id if next_id is None else next_id,
        )

    def _require(self, v):
        if v not in self._graph:
            raise UnknownVertex(f"vertex {v} is not in the graph")

    def __eq__(self, other):
        if not isinstance(other, IntersectionGraph):
            return NotImplemented
        return self.vertices == other.vertices and Counter(self.edges) == Counter(other.edges)

    def __hash__(self):
        return hash((tuple(self.vertices.items()), tuple(self.edges)))

    def __reduce__(self):
        return (IntersectionGraph, (self.vertices, self.edges, self.next_id))

    def __repr__(self):
        return f"IntersectionGraph(vertices={self.vertices}, edges={self.edges})"


def build_intersection_graph(d):
    """
    Intersection graph of a Gauss diagram.

    Each chord c becomes vertex c with the chord's sign. For every crossing
    pair (c, x) there is one edge, directed into c from x iff
    crossing_sense(d, c, x) = +1.
    """
    ids = d.chord_ids
    senses = sense_matrix(d)
    edges = []
    for i, c in enumerate(ids):
        for j in range(i + 1, len(ids)):
            s = senses[i, j]
            if s == 1:
                edges.append((ids[j], c))
            elif s == -1:
                edges.append((c, ids[j]))
    return IntersectionGraph(dict(d.signs), edges)


def vertex_index(g, v):
    """
    Index of vertex v: signs of in-neighbors minus signs of out-neighbors,
    counted with edge multiplicity.

    Raises:
        UnknownVertex: If v is not in g
    """
    ins = g.in_neighbors(v)
    outs = g.out_neighbors(v)
    return sum(g.sign(u) for u in ins) - sum(g.sign(w) for w in outs)


def vertex_switch(g, v):
    """
    Negate the sign of v and reverse every edge incident to v.

    Raises:
        UnknownVertex: If v is not in g
    """
    g.sign(v)
    vertices = g.vertices
    vertices[v] = -vertices[v]
    edges = [(b, a) if v in (a, b) else (a, b) for a, b in g.edges]
    return g.rebuild(vertices, edges)


def disjoint_union(g1, g2):
    """
    Disjoint union; the vertices of g2 are renamed to fresh ids of g1.

    Returns:
        IntersectionGraph: g1 plus a relabelled copy of g2
    """
    base = g1.next_id
    labels = {v: base + i for i, v in enumerate(g2.vertices)}
    vertices = g1.vertices
    vertices.update({labels[v]: s for v, s in g2.vertices.items()})
    edges = g1.edges + [(labels[a], labels[b]) for a, b in g2.edges]
    return IntersectionGraph(vertices, edges, base + len(labels))
