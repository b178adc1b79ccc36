"""
Virtual knot Gauss diagrams, their intersection graphs and the writhe
polynomial.

Subpackages:
    diagram     Gauss diagrams, Gauss codes, connected sum, crossing switch
    graph       intersection graphs, omega moves, isomorphism, export
    invariants  Laurent polynomials, chord index, writhe polynomial
    moves       Reidemeister and shell moves, bounded search, fuzzing
    realize     generator knots and realization of admissible polynomials
"""
from .errors import VKnotError
from .diagram import (
    GaussDiagram,
    connected_sum,
    crossing_switch,
    mirror_image,
    parse_gauss_code,
    random_diagram,
    reverse,
    serialize_gauss_code,
)
from .graph import (
    IntersectionGraph,
    OmegaSite,
    apply_omega,
    build_intersection_graph,
    enumerate_omega_sites,
    graphs_isomorphic,
    vertex_switch,
)
from .invariants import (
    LaurentPolynomial,
    chord_index,
    graph_writhe_polynomial,
    graphs_equivalent,
    is_realizable,
    parse_poly,
    writhe,
    writhe_polynomial,
)
from .moves import (
    DiagramMoveSite,
    MoveKind,
    MoveTrace,
    apply_move,
    bounded_equivalence_search,
    enumerate_moves,
    fuzz_invariance,
)
from .realize import GeneratorSpec, decompose, generator_diagram, realize

__version__ = "0.1.0"
