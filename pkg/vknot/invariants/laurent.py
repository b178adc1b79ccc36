"""
Sparse integer Laurent polynomials in one variable t.

Text grammar: terms `<int>`, `t`, `t^<int>`, `<int>t`, `<int>t^<int>` joined
by `+` / `-`, e.g. `t + t^-1 - 2`. Blanks may separate the parts of a term
but never split a number. The canonical form lists terms by strictly
descending exponent, omits unit coefficients and elides `t^0`.
"""
import json
import re

import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from ..errors import PolynomialBoundError, PolyParseError

MAX_COEFFICIENT = 10 ** 6
MAX_EXPONENT = 10 ** 3

t = sp.Symbol("t")

TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*(?:(t)\s*(?:\^\s*([+-]?\d+))?)?\s*")
TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)


def coefficient_map(expr):
    """
    Exponent -> coefficient map of a Laurent polynomial expression in t.

    Raises:
        PolyParseError: If expr has a non-integer coefficient or exponent, or
            another symbol than t
    """
    expr = sp.expand(sp.sympify(expr))
    if expr.free_symbols - {t}:
        raise PolyParseError(f"{expr} is not a polynomial in t")
    coeffs = {}
    for term in sp.Add.make_args(expr):
        coeff, exp = term.as_coeff_exponent(t)
        if not (coeff.is_Integer and exp.is_Integer):
            raise PolyParseError(f"term {term} is not an integer multiple of an integer power of t")
        coeffs[int(exp)] = coeffs.get(int(exp), 0) + int(coeff)
    return coeffs


class LaurentPolynomial:
    """
    Immutable map exponent -> nonzero integer coefficient, with its sympy
    expression in the symbol t.

    Coefficients are bounded by MAX_COEFFICIENT and exponents by MAX_EXPONENT
    in absolute value; larger values raise PolynomialBoundError.
    """

    __slots__ = ("_coeffs", "_expr")

    def __init__(self, coeffs=None):
        clean = {}
        for exp, coeff in dict(coeffs or {}).items():
            exp, coeff = int(exp), int(coeff)
            clean[exp] = clean.get(exp, 0) + coeff
        clean = {e: c for e, c in clean.items() if c != 0}
        for exp, coeff in clean.items():
            if abs(exp) > MAX_EXPONENT or abs(coeff) > MAX_COEFFICIENT:
                raise PolynomialBoundError(
                    f"term {coeff}t^{exp} outside |coeff| <= {MAX_COEFFICIENT}, |exp| <= {MAX_EXPONENT}"
                )
        self._coeffs = dict(sorted(clean.items(), reverse=True))
        self._expr = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def from_expr(cls, expr):
        """Polynomial of a sympy expression in t, e.g. `t**2 - 2*t + 1`."""
        return cls(coefficient_map(expr))

    @property
    def expr(self):
        """The polynomial as an expanded sympy expression in t."""
        if self._expr is None:
            self._expr = sp.Add(*(c * t ** e for e, c in self._coeffs.items()))
        return self._expr

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def coefficient(self, exp):
        return self._coeffs.get(exp, 0)

    def exponents(self):
        return tuple(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial.from_expr(self.expr + other.expr)

    def __neg__(self):
        return LaurentPolynomial.from_expr(-self.expr)

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial.from_expr(self.expr - other.expr)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LaurentPolynomial.from_expr(k * self.expr)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def eval_at_one(self):
        return int(self.expr.subs(t, 1))

    def derivative_at_one(self):
        return int(sp.diff(self.expr, t).subs(t, 1))

    def substitute_inverse(self):
        """f(t) -> f(1/t)."""
        return LaurentPolynomial.from_expr(self.expr.subs(t, 1 / t))

    def to_json(self):
        return json.dumps({str(e): c for e, c in self._coeffs.items()})

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text) if isinstance(text, str) else text
            return cls({int(e): int(c) for e, c in data.items()})
        except (ValueError, AttributeError, TypeError) as exc:
            raise PolyParseError(f"bad polynomial JSON: {exc}") from exc

    def __getstate__(self):
        return self._coeffs

    def __setstate__(self, coeffs):
        self._coeffs = coeffs
        self._expr = None

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPolynomial({format_poly(self)!r})"


def _format_term(exp, magnitude):
    if exp == 0:
        return str(magnitude)
    power = "t" if exp == 1 else f"t^{exp}"
    return power if magnitude == 1 else f"{magnitude}{power}"


def format_poly(f):
    """Canonical text of f; the zero polynomial is `0`."""
    if f.is_zero():
        return "0"
    parts = []
    for i, (exp, coeff) in enumerate(f.coeffs.items()):
        term = _format_term(exp, abs(coeff))
        if i == 0:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'} {term}")
    return " ".join(parts)


def _check_terms(text):
    pos = 0
    while pos < len(text):
        match = TERM_RE.match(text, pos)
        sign, digits, var, _ = match.groups()
        if digits is None and var is None:
            raise PolyParseError(f"unexpected {text[pos:].strip()!r} in {text!r}")
        if sign is None and pos > 0:
            raise PolyParseError(f"missing '+' or '-' before {text[pos:].strip()!r}")
        pos = match.end()


def parse_poly(text):
    """
    Parse polynomial text.

    Raises:
        PolyParseError: If the text does not follow the term grammar
        PolynomialBoundError: If a term is out of the supported range
    """
    if not text.strip():
        raise PolyParseError("empty polynomial")
    _check_terms(text)
    try:
        expr = parse_expr("".join(text.split()), local_dict={"t": t}, transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError) as exc:
        raise PolyParseError(f"cannot read {text!r}: {exc}") from exc
    return LaurentPolynomial.from_expr(expr)


def add(f, g):
    return f + g


def negate(f):
    return -f


def scale(f, k):
    return f * k


def equals(f, g):
    return f == g


def eval_at_one(f):
    return f.eval_at_one()


def derivative_at_one(f):
    return f.derivative_at_one()
