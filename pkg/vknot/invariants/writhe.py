"""
Chord index, writhe and the writhe polynomial, computed from a Gauss diagram
or from its intersection graph.
"""
from dataclasses import dataclass, field

import numpy as np

from ..diagram import sense_matrix
from ..graph import vertex_index
from .laurent import LaurentPolynomial


@dataclass(frozen=True)
class IndexProfile:
    """Per-chord (sign, index) pairs and the writhe of a diagram."""
    entries: dict = field(default_factory=dict)
    writhe: int = 0

    def index(self, c):
        return self.entries[c][1]

    def weighted_index_sum(self):
        return sum(sign * ind for sign, ind in self.entries.values())


def _index_vector(d):
    signs = np.array([d.sign(c) for c in d.chord_ids], dtype=np.int64)
    return sense_matrix(d) @ signs, signs


def index_profile(d):
    """
    Signs and chord indices of every chord.

    The index vector is the sense matrix applied to the sign vector, i.e.
    Ind(c) = sum over x crossing c of sense(c, x) * w(x).
    """
    if d.n == 0:
        return IndexProfile({}, 0)
    indices, signs = _index_vector(d)
    entries = {
        c: (int(s), int(i)) for c, s, i in zip(d.chord_ids, signs, indices)
    }
    return IndexProfile(entries, int(signs.sum()))


def chord_index(d, c):
    """
    Index of chord c: r+(c) - r-(c) - l+(c) + l-(c).

    Raises:
        UnknownChord: If c is not in d
    """
    d.chord(c)
    return index_profile(d).index(c)


def writhe(d):
    """Sum of the chord signs."""
    return sum(d.signs.values())


def writhe_polynomial(d):
    """
    W(t) = sum_c w(c) t^Ind(c) - w(D).

    Returns:
        LaurentPolynomial: Zero for the empty diagram
    """
    profile = index_profile(d)
    coeffs = {0: -profile.writhe}
    for sign, ind in profile.entries.values():
        coeffs[ind] = coeffs.get(ind, 0) + sign
    return LaurentPolynomial(coeffs)


def graph_writhe_polynomial(g):
    """sum_v w(v) t^Ind(v) - sum_v w(v), with the vertex index of the graph."""
    coeffs = {0: -sum(g.vertices.values())}
    for v, sign in g.vertices.items():
        ind = vertex_index(g, v)
        coeffs[ind] = coeffs.get(ind, 0) + sign
    return LaurentPolynomial(coeffs)


def is_realizable(f):
    """True iff f(1) = 0 and f'(1) = 0, i.e. f is the writhe polynomial of some virtual knot."""
    return f.eval_at_one() == 0 and f.derivative_at_one() == 0


def graphs_equivalent(g1, g2):
    """
    Decide equivalence of intersection graphs under the omega moves.

    Two intersection graphs of virtual knot diagrams are equivalent exactly when
    their writhe polynomials agree. For arbitrary vertex-signed directed
    multigraphs this only compares the writhe polynomials.
    """
    return graph_writhe_polynomial(g1) == graph_writhe_polynomial(g2)
