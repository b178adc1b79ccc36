from .gauss_diagram import (
    ChordData,
    EndpointRef,
    GaussDiagram,
    Role,
    crossing_sense,
    interleaves,
    sense_matrix,
)
from .gauss_code import (
    diagram_from_json,
    diagram_to_json,
    first_appearance_labels,
    parse_gauss_code,
    relabel,
    serialize_gauss_code,
)
from .surgery import connected_sum, crossing_switch, mirror_image, random_diagram, reverse
