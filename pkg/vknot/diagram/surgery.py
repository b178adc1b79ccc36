"""
Diagram surgery: connected sum, crossing switch, mirror, reversal and random
generation.
"""
from ..utils import make_rng, random_permutation
from .gauss_diagram import EndpointRef, GaussDiagram, Role


def connected_sum(d1, d2):
    """
    Connected sum at the basepoints.

    The endpoint word of the result is the word of d1 followed by the word of
    d2. Chords of d1 keep their ids, chords of d2 are shifted past them, so no
    chord of d1 interleaves a chord of d2.

    Args:
        d1, d2: GaussDiagram (either may be empty)

    Returns:
        GaussDiagram: The summed diagram
    """
    offset = max(d1.chord_ids, default=0)
    labels = {c: offset + i + 1 for i, c in enumerate(d2.chord_ids)}
    endpoints = list(d1.endpoints) + [EndpointRef(labels[ep.chord], ep.role) for ep in d2.endpoints]
    signs = dict(d1.signs)
    signs.update({labels[c]: s for c, s in d2.signs.items()})
    return GaussDiagram(endpoints, signs)


def crossing_switch(d, c):
    """
    Switch the crossing of chord c: exchange its over/under endpoints and
    negate its sign. Other chords are untouched.

    Raises:
        UnknownChord: If c is not in d
    """
    d.chord(c)
    endpoints = [
        EndpointRef(ep.chord, ep.role.flipped()) if ep.chord == c else ep
        for ep in d.endpoints
    ]
    signs = dict(d.signs)
    signs[c] = -signs[c]
    return GaussDiagram(endpoints, signs)


def mirror_image(d):
    """Switch every crossing. The writhe polynomial becomes -W(1/t)."""
    endpoints = [EndpointRef(ep.chord, ep.role.flipped()) for ep in d.endpoints]
    return GaussDiagram(endpoints, {c: -s for c, s in d.signs.items()})


def reverse(d):
    """
    Reverse the orientation of the knot: the word is read backwards while the
    chords keep their directions and signs. The writhe polynomial becomes W(1/t).
    """
    return GaussDiagram(list(reversed(d.endpoints)), d.signs)


def random_diagram(n, seed):
    """
    Generate a random Gauss diagram.

    Args:
        n: Number of chords (ids 1..n)
        seed: Integer seed or numpy Generator

    Returns:
        GaussDiagram: Uniformly shuffled endpoint word with independent uniform
        signs and over/under assignment
    """
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    rng = make_rng(seed)
    word = [c for c in range(1, n + 1) for _ in range(2)]
    word = [word[i] for i in random_permutation(2 * n, rng)]
    signs = {c: int(s) for c, s in zip(range(1, n + 1), rng.choice([1, -1], size=n))}
    over_first = {c: bool(b) for c, b in zip(range(1, n + 1), rng.integers(0, 2, size=n))}

    seen = set()
    endpoints = []
    for c in word:
        first = c not in seen
        seen.add(c)
        role = Role.OVER if first == over_first[c] else Role.UNDER
        endpoints.append(EndpointRef(c, role))
    return GaussDiagram(endpoints, signs)
