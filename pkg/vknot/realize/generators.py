"""
Generator knots of the realization basis.

Every admissible writhe polynomial is an integer combination of

    P(k) = t^k - k*t + (k - 1)             k >= 2
    N(k) = t^k - |k|*t^-1 + (|k| - 1)      k <= -2
    T    = t + t^-1 - 2

each of which is the writhe polynomial of a small explicit diagram.
"""
from dataclasses import dataclass
from enum import Enum

from ..diagram import mirror_image, parse_gauss_code, relabel, reverse
from ..errors import BadSpec
from ..graph import build_intersection_graph
from ..invariants import LaurentPolynomial
from ..invariants.laurent import t

TREFOIL_CODE = "O1+ O2+ U1+ U2+"


class Family(str, Enum):
    P = "P"
    N = "N"
    T = "T"


@dataclass(frozen=True)
class GeneratorSpec:
    """
    One generator: family P with k >= 2, family N with k <= -2, or T with k = 1.
    orientation -1 selects the generator whose writhe polynomial is the
    negated basis element.
    """
    family: Family
    k: int
    orientation: int = 1

    def __post_init__(self):
        try:
            object.__setattr__(self, "family", Family(self.family))
        except ValueError:
            raise BadSpec(f"unknown generator family {self.family!r}") from None
        if self.orientation not in (1, -1):
            raise BadSpec(f"orientation must be +1 or -1, got {self.orientation!r}")
        if self.family is Family.P and self.k < 2:
            raise BadSpec(f"family P needs k >= 2, got {self.k}")
        if self.family is Family.N and self.k > -2:
            raise BadSpec(f"family N needs k <= -2, got {self.k}")
        if self.family is Family.T and self.k != 1:
            raise BadSpec(f"family T is the single generator k = 1, got {self.k}")

    def to_dict(self):
        return {"family": self.family.value, "k": self.k, "orientation": self.orientation}

    def __str__(self):
        return f"{self.family.value}({self.k}, {'+' if self.orientation > 0 else '-'})"


def basis(spec):
    """Closed-form writhe polynomial of a generator, orientation included."""
    k = spec.k
    if spec.family is Family.P:
        expr = t**k - k * t + (k - 1)
    elif spec.family is Family.N:
        expr = t**k - abs(k) / t + (abs(k) - 1)
    else:
        expr = t + 1 / t - 2
    return LaurentPolynomial.from_expr(spec.orientation * expr)


def _positive_code(spec):
    if spec.family is Family.T:
        return TREFOIL_CODE
    m = abs(spec.k)
    satellites = range(2, m + 2)
    if spec.family is Family.P:
        # one positive main chord, every negative satellite crosses it right to left
        tokens = ["O1+"] + [f"O{c}-" for c in satellites] + ["U1+"] + [f"U{c}-" for c in reversed(satellites)]
    else:
        tokens = ["O1+"] + [f"U{c}-" for c in satellites] + ["U1+"] + [f"O{c}-" for c in reversed(satellites)]
    return " ".join(tokens)


def generator_diagram(spec):
    """
    Diagram of a generator.

    Args:
        spec: GeneratorSpec

    Returns:
        GaussDiagram: Diagram with writhe polynomial basis(spec)
    """
    d = parse_gauss_code(_positive_code(spec))
    if spec.orientation < 0:
        # mirror maps W(t) to -W(1/t) and reversal maps it back to -W(t)
        d = relabel(reverse(mirror_image(d)))
    return d


def generator_graph(spec):
    """Intersection graph of generator_diagram(spec)."""
    return build_intersection_graph(generator_diagram(spec))
