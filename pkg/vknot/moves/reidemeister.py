"""
Reidemeister moves on Gauss diagrams.

Omega1 adds or removes a chord with adjacent endpoints. Omega2 adds or removes
two opposite-sign chords whose tails are adjacent and whose heads are adjacent,
nested so that they do not cross each other. Omega3 reverses three adjacent
endpoint pairs (one strand over twice, one under twice, one mixed) and is
admitted when every one of the three chord indices is kept.
"""
import itertools
from collections import defaultdict

from ..diagram import EndpointRef, GaussDiagram, Role, interleaves
from ..errors import InvalidSite
from ..invariants import index_profile
from ..utils import check_sign, cyclic_adjacent
from .sites import DiagramMoveSite, MoveKind


def gaps(d):
    """Insertion slots of a diagram; the empty diagram has the single slot 0."""
    return range(max(d.size, 1))


def _check_gap(d, g, site):
    if not 0 <= g < max(d.size, 1):
        raise InvalidSite(f"{site.kind.value}: gap {g} out of range")


def remove_chords(d, chords):
    chords = set(chords)
    endpoints = [ep for ep in d.endpoints if ep.chord not in chords]
    return GaussDiagram(endpoints, {c: s for c, s in d.signs.items() if c not in chords})


def is_kink(d, c):
    return cyclic_adjacent(d.tail(c), d.head(c), d.size)


# -- Omega1 -----------------------------------------------------------------

def r1_add_sites(d):
    return [
        DiagramMoveSite(MoveKind.R1_ADD, (g,), sign=s, over_first=o)
        for g in gaps(d)
        for s in (1, -1)
        for o in (True, False)
    ]


def apply_r1_add(d, site):
    (g,) = site.positions
    _check_gap(d, g, site)
    c = d.fresh_chord_id()
    first, second = (Role.OVER, Role.UNDER) if site.over_first else (Role.UNDER, Role.OVER)
    endpoints = list(d.endpoints)
    endpoints[g:g] = [EndpointRef(c, first), EndpointRef(c, second)]
    signs = dict(d.signs)
    signs[c] = check_sign(site.sign)
    return GaussDiagram(endpoints, signs)


def r1_remove_sites(d):
    return [DiagramMoveSite(MoveKind.R1_REMOVE, chords=(c,)) for c in d.chord_ids if is_kink(d, c)]


def apply_r1_remove(d, site):
    (c,) = site.chords
    if c not in d.signs or not is_kink(d, c):
        raise InvalidSite(f"R1_remove: chord {c} is not a kink")
    return remove_chords(d, (c,))


# -- Omega2 -----------------------------------------------------------------

def r2_add_sites(d):
    return [
        DiagramMoveSite(MoveKind.R2_ADD, (g1, g2), sign=s, over_first=o)
        for g1, g2 in itertools.combinations_with_replacement(gaps(d), 2)
        for s in (1, -1)
        for o in (True, False)
    ]


def apply_r2_add(d, site):
    g1, g2 = site.positions
    _check_gap(d, g1, site)
    _check_gap(d, g2, site)
    if g1 > g2:
        raise InvalidSite("R2_add: gaps must be ordered")
    outer = d.fresh_chord_id()
    inner = outer + 1
    near, far = (Role.OVER, Role.UNDER) if site.over_first else (Role.UNDER, Role.OVER)
    endpoints = list(d.endpoints)
    endpoints[g2:g2] = [EndpointRef(inner, far), EndpointRef(outer, far)]
    endpoints[g1:g1] = [EndpointRef(outer, near), EndpointRef(inner, near)]
    signs = dict(d.signs)
    signs[outer] = check_sign(site.sign)
    signs[inner] = -signs[outer]
    return GaussDiagram(endpoints, signs)


def is_r2_pair(d, c1, c2):
    if c1 == c2 or d.sign(c1) != -d.sign(c2):
        return False
    if not (cyclic_adjacent(d.tail(c1), d.tail(c2), d.size)
            and cyclic_adjacent(d.head(c1), d.head(c2), d.size)):
        return False
    return not interleaves(d, c1, c2)


def r2_remove_sites(d):
    return [
        DiagramMoveSite(MoveKind.R2_REMOVE, chords=(c1, c2))
        for c1, c2 in itertools.combinations(d.chord_ids, 2)
        if is_r2_pair(d, c1, c2)
    ]


def apply_r2_remove(d, site):
    c1, c2 = site.chords
    if c1 not in d.signs or c2 not in d.signs or not is_r2_pair(d, c1, c2):
        raise InvalidSite(f"R2_remove: chords {c1}, {c2} do not form a bigon pair")
    return remove_chords(d, (c1, c2))


# -- Omega3 -----------------------------------------------------------------

def _swap_pairs(d, starts):
    endpoints = list(d.endpoints)
    for p in starts:
        q = (p + 1) % d.size
        endpoints[p], endpoints[q] = endpoints[q], endpoints[p]
    return GaussDiagram(endpoints, d.signs)


def _r3_pattern(d, starts):
    """Chord triple of three adjacent pairs, or None when the pairs do not form an Omega3 pattern."""
    size = d.size
    cells = [(p, (p + 1) % size) for p in starts]
    if len({x for cell in cells for x in cell}) != 6:
        return None
    pair_chords = []
    role_pattern = []
    for p, q in cells:
        a, b = d.endpoints[p], d.endpoints[q]
        if a.chord == b.chord:
            return None
        pair_chords.append(frozenset((a.chord, b.chord)))
        role_pattern.append("".join(sorted(r.value for r in (a.role, b.role))))
    triple = frozenset().union(*pair_chords)
    if len(triple) != 3 or len(set(pair_chords)) != 3:
        return None
    if sorted(role_pattern) != ["OO", "OU", "UU"]:
        return None
    return tuple(sorted(triple))


def is_r3_site(d, starts):
    triple = _r3_pattern(d, starts)
    if triple is None:
        return False
    before = index_profile(d)
    after = index_profile(_swap_pairs(d, starts))
    return all(before.index(c) == after.index(c) for c in triple)


def r3_sites(d):
    size = d.size
    if size < 6:
        return []
    by_pair = defaultdict(list)
    partners = defaultdict(set)
    for p in range(size):
        a, b = d.endpoints[p].chord, d.endpoints[(p + 1) % size].chord
        if a != b:
            by_pair[frozenset((a, b))].append(p)
            partners[a].add(b)
            partners[b].add(a)
    sites = set()
    for key in list(by_pair):
        a, b = sorted(key)
        for c in partners[a] & partners[b]:
            if c in key:
                continue
            for starts in itertools.product(
                by_pair[key], by_pair[frozenset((a, c))], by_pair[frozenset((b, c))]
            ):
                starts = tuple(sorted(starts))
                if starts not in sites and is_r3_site(d, starts):
                    sites.add(starts)
    return [DiagramMoveSite(MoveKind.R3, starts) for starts in sorted(sites)]


def apply_r3(d, site):
    starts = tuple(site.positions)
    if len(starts) != 3 or d.size < 6 or not all(0 <= p < d.size for p in starts):
        raise InvalidSite(f"R3: bad positions {starts}")
    if not is_r3_site(d, starts):
        raise InvalidSite(f"R3: no Omega3 pattern at {starts}")
    return _swap_pairs(d, starts)
