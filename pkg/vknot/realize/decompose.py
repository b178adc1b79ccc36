"""
Decomposition of an admissible polynomial over the generator basis, and its
realization by connected sums.
"""
import logging

import sympy as sp

from ..diagram import GaussDiagram, connected_sum
from ..errors import NotRealizable, SizeLimit
from ..graph import IntersectionGraph, disjoint_union
from ..invariants import coefficient_map, is_realizable
from .generators import Family, GeneratorSpec, basis, generator_diagram, generator_graph

logger = logging.getLogger(__name__)

MAX_REALIZED_CHORDS = 100000


def _orientation(a):
    return 1 if a > 0 else -1


def decompose(f):
    """
    Write f as a signed sum of generators.

    Exponents k with |k| >= 2 are cleared from the largest |k| down with P(k)
    or N(k); the remainder is a multiple of the trefoil polynomial. The
    remainder is kept as a sympy expression, so multiplicities are not bound
    by the coefficient range of f.

    Args:
        f: LaurentPolynomial with f(1) = f'(1) = 0

    Returns:
        list: (GeneratorSpec, multiplicity) pairs, multiplicity >= 1

    Raises:
        NotRealizable: If f(1) != 0 or f'(1) != 0
    """
    if not is_realizable(f):
        raise NotRealizable(
            f"f(1) = {f.eval_at_one()}, f'(1) = {f.derivative_at_one()}; both must vanish"
        )
    terms = []
    rest = f.expr
    for k in sorted((e for e in f.exponents() if abs(e) >= 2), key=lambda e: (-abs(e), -e)):
        a = coefficient_map(rest).get(k, 0)
        if a == 0:
            continue
        spec = GeneratorSpec(Family.P if k > 0 else Family.N, k, _orientation(a))
        terms.append((spec, abs(a)))
        rest = sp.expand(rest - basis(spec).expr * abs(a))

    a = coefficient_map(rest).get(1, 0)
    if a:
        spec = GeneratorSpec(Family.T, 1, _orientation(a))
        terms.append((spec, abs(a)))
        rest = sp.expand(rest - basis(spec).expr * abs(a))
    if rest != 0:
        # unreachable for admissible f: the remainder is a multiple of t - 2 + 1/t
        raise NotRealizable(f"remainder {rest} is not a multiple of t - 2 + t^-1")
    logger.debug("decompose %s -> %s", f, ", ".join(f"{s} x{m}" for s, m in terms))
    return terms


def _generator_chords(spec):
    return 2 if spec.family is Family.T else abs(spec.k) + 1


def _checked_terms(f, max_chords):
    terms = decompose(f)
    size = sum(_generator_chords(spec) * m for spec, m in terms)
    if size > max_chords:
        raise SizeLimit(f"realizing {f} takes {size} chords, cap is {max_chords}")
    return terms


def realize(f, max_chords=MAX_REALIZED_CHORDS):
    """
    Build a diagram whose writhe polynomial is f.

    Returns:
        GaussDiagram: Connected sum of the generators of decompose(f); empty for f = 0

    Raises:
        NotRealizable: If f is not admissible
        SizeLimit: If the diagram would have more than max_chords chords
    """
    d = GaussDiagram.empty()
    for spec, multiplicity in _checked_terms(f, max_chords):
        piece = generator_diagram(spec)
        for _ in range(multiplicity):
            d = connected_sum(d, piece)
    return d


def realize_graph(f, max_chords=MAX_REALIZED_CHORDS):
    """Disjoint union of generator graphs with graph writhe polynomial f."""
    g = IntersectionGraph({})
    for spec, multiplicity in _checked_terms(f, max_chords):
        piece = generator_graph(spec)
        for _ in range(multiplicity):
            g = disjoint_union(g, piece)
    return g
