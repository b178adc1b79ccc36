from .laurent import (
    MAX_COEFFICIENT,
    MAX_EXPONENT,
    LaurentPolynomial,
    add,
    coefficient_map,
    derivative_at_one,
    equals,
    eval_at_one,
    format_poly,
    negate,
    parse_poly,
    scale,
)
from .writhe import (
    IndexProfile,
    chord_index,
    graph_writhe_polynomial,
    graphs_equivalent,
    index_profile,
    is_realizable,
    writhe,
    writhe_polynomial,
)
