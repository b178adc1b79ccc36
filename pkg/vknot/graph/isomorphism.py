"""
Isomorphism of small intersection graphs.
"""
from collections import Counter

from networkx.algorithms import isomorphism

from ..errors import SizeLimit

DEFAULT_MAX_VERTICES = 16


def _profile(g):
    return Counter(
        (g.sign(v), len(g.in_neighbors(v)), len(g.out_neighbors(v))) for v in g.vertices
    )


def _same_multiplicity(edges1, edges2):
    return len(edges1) == len(edges2)


def graphs_isomorphic(g1, g2, max_vertices=DEFAULT_MAX_VERTICES):
    """
    Test for a vertex bijection preserving signs, edge directions and edge
    multiplicities.

    Graphs are pruned on their (sign, in-degree, out-degree) profiles first;
    the VF2 backtracking matcher does the rest.

    Args:
        g1, g2: IntersectionGraph
        max_vertices: Size cap for either graph

    Returns:
        bool: True iff the graphs are isomorphic

    Raises:
        SizeLimit: If a graph has more than max_vertices vertices
    """
    for g in (g1, g2):
        if len(g) > max_vertices:
            raise SizeLimit(f"graph has {len(g)} vertices, cap is {max_vertices}")
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return False
    if _profile(g1) != _profile(g2):
        return False
    matcher = isomorphism.MultiDiGraphMatcher(
        g1.to_networkx(),
        g2.to_networkx(),
        node_match=isomorphism.categorical_node_match("sign", None),
        edge_match=_same_multiplicity,
    )
    return matcher.is_isomorphic()
