from .intersection_graph import (
    IntersectionGraph,
    build_intersection_graph,
    disjoint_union,
    vertex_index,
    vertex_switch,
)
from .omega import (
    ADD_KINDS,
    OmegaKind,
    OmegaSite,
    apply_omega,
    derive_omega3_prime,
    enumerate_omega_sites,
    random_omega_site,
)
from .isomorphism import DEFAULT_MAX_VERTICES, graphs_isomorphic
from .export import export_graph, graph_from_json, graph_to_dict
