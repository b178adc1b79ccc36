"""
Gauss diagram model: a counterclockwise circle carrying signed chords directed
from the overcrossing preimage (tail) to the undercrossing preimage (head).
"""
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType

import numpy as np

from ..errors import GaussCodeError, NotCrossing, RoleError, UnknownChord
from ..utils import check_sign, in_open_arc


class Role(str, Enum):
    OVER = "O"
    UNDER = "U"

    def flipped(self):
        return Role.UNDER if self is Role.OVER else Role.OVER


@dataclass(frozen=True)
class EndpointRef:
    """One chord endpoint on the circle."""
    chord: int
    role: Role


@dataclass(frozen=True)
class ChordData:
    """Sign and circle positions of one chord (tail = over, head = under)."""
    sign: int
    over_pos: int
    under_pos: int

    @property
    def tail(self):
        return self.over_pos

    @property
    def head(self):
        return self.under_pos


class GaussDiagram:
    """
    An immutable Gauss diagram.

    Circle positions 0..2n-1 run counterclockwise from the basepoint. Each chord
    id appears exactly twice in the endpoint word, once as Over and once as Under.
    """

    __slots__ = ("_endpoints", "_signs", "_chords", "_hash")

    def __init__(self, endpoints, signs):
        """
        Build and validate a diagram.

        Args:
            endpoints: Iterable of EndpointRef (or (chord, role) pairs) in circle order
            signs: Mapping chord id -> +1 / -1

        Raises:
            RoleError: If a chord does not have exactly one Over and one Under endpoint
            GaussCodeError: If a sign is invalid or does not match the chord set
        """
        refs = []
        for ep in endpoints:
            if not isinstance(ep, EndpointRef):
                chord, role = ep
                ep = EndpointRef(int(chord), Role(role))
            refs.append(ep)
        positions = {}
        for pos, ep in enumerate(refs):
            if ep.chord < 0:
                raise GaussCodeError(f"chord ids must be nonnegative, got {ep.chord}")
            slot = positions.setdefault(ep.chord, {})
            if ep.role in slot:
                raise RoleError(f"chord {ep.chord} has two {ep.role.name} endpoints")
            slot[ep.role] = pos
        for chord, slot in positions.items():
            if len(slot) != 2:
                raise RoleError(f"chord {chord} appears only once")

        signs = {int(c): s for c, s in dict(signs).items()}
        if set(signs) != set(positions):
            raise GaussCodeError("signs must be given for exactly the chords of the word")
        chords = {}
        for chord, slot in positions.items():
            try:
                sign = check_sign(signs[chord])
            except ValueError as exc:
                raise GaussCodeError(f"chord {chord}: {exc}") from exc
            chords[chord] = ChordData(sign, slot[Role.OVER], slot[Role.UNDER])

        self._endpoints = tuple(refs)
        self._signs = MappingProxyType({c: chords[c].sign for c in sorted(chords)})
        self._chords = MappingProxyType(chords)
        self._hash = hash((self._endpoints, tuple(self._signs.items())))

    @classmethod
    def empty(cls):
        return cls((), {})

    @property
    def endpoints(self):
        return self._endpoints

    @property
    def signs(self):
        return self._signs

    @property
    def chords(self):
        return self._chords

    @property
    def n(self):
        return len(self._chords)

    @property
    def size(self):
        return len(self._endpoints)

    @property
    def chord_ids(self):
        return tuple(self._signs)

    def chord(self, c):
        try:
            return self._chords[c]
        except KeyError:
            raise UnknownChord(f"chord {c} is not in the diagram") from None

    def sign(self, c):
        return self.chord(c).sign

    def tail(self, c):
        return self.chord(c).over_pos

    def head(self, c):
        return self.chord(c).under_pos

    def fresh_chord_id(self):
        return max(self._chords, default=0) + 1

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self._endpoints == other._endpoints and dict(self._signs) == dict(other._signs)

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (GaussDiagram, (self._endpoints, dict(self._signs)))

    def __len__(self):
        return self.n

    def __repr__(self):
        from .gauss_code import serialize_gauss_code
        return f"GaussDiagram({serialize_gauss_code(self, relabel=False)!r})"


def interleaves(d, c1, c2):
    """
    Test whether two chords cross.

    Args:
        d: GaussDiagram
        c1, c2: Distinct chord ids

    Returns:
        bool: True iff exactly one endpoint of c2 lies strictly inside the
        counterclockwise arc between the endpoints of c1
    """
    a, b = d.chord(c1), d.chord(c2)
    if c1 == c2:
        raise ValueError("a chord does not interleave with itself")
    lo, hi = sorted((a.over_pos, a.under_pos))
    inside = sum(lo < p < hi for p in (b.over_pos, b.under_pos))
    return inside == 1


def crossing_sense(d, c, x):
    """
    Direction in which chord x crosses chord c.

    Returns +1 when the tail of x lies on the counterclockwise arc from the head
    of c to the tail of c (x crosses c left to right), -1 otherwise.

    Raises:
        NotCrossing: If the chords do not interleave
    """
    if not interleaves(d, c, x):
        raise NotCrossing(f"chords {c} and {x} do not cross")
    cc = d.chord(c)
    inside = in_open_arc(d.tail(x), cc.under_pos, cc.over_pos, d.size)
    return 1 if inside else -1


def sense_matrix(d):
    """
    Antisymmetric matrix of crossing senses.

    Entry [i, j] is crossing_sense(d, ids[i], ids[j]) for interleaved pairs and
    0 otherwise, where ids = d.chord_ids.

    Returns:
        numpy.ndarray: n x n int64 matrix
    """
    ids = d.chord_ids
    if not ids:
        return np.zeros((0, 0), dtype=np.int64)
    tails = np.array([d.tail(c) for c in ids])
    heads = np.array([d.head(c) for c in ids])
    lo = np.minimum(tails, heads)[:, None]
    hi = np.maximum(tails, heads)[:, None]

    def strictly_inside(p):
        return (lo < p[None, :]) & (p[None, :] < hi)

    crossing = strictly_inside(tails) ^ strictly_inside(heads)

    # tail(x) on the ccw open arc head(c) -> tail(c)
    t = tails[None, :]
    h_c = heads[:, None]
    t_c = tails[:, None]
    on_arc = np.where(h_c < t_c, (h_c < t) & (t < t_c), (t > h_c) | (t < t_c))
    return np.where(crossing, np.where(on_arc, 1, -1), 0).astype(np.int64)
