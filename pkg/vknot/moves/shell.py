"""
Shell moves on Gauss diagrams.

A shell is a chord whose two endpoints are adjacent on the circle.

S1 slides a shell past one neighbouring endpoint of another chord; the
intersection graph does not change.

S2 exchanges two adjacent endpoints P (of c1) and Q (of c2) and wraps each of
them in a new chord:

    P Q  <->  c4 Q c4 c3 P c3

so c3 crosses only c1 and c4 crosses only c2. The directions and signs of c3
and c4 are searched so that w(c3) = -w(c4), Ind(c3) = Ind(c4), and the indices
of c1 and c2 are kept.
"""
import itertools
import logging

from ..diagram import EndpointRef, GaussDiagram, Role
from ..errors import InvalidSite, S2ConstraintUnsatisfiable
from ..invariants import index_profile
from ..utils import check_sign, replace_cyclic
from .reidemeister import is_kink
from .sites import DiagramMoveSite, MoveKind

logger = logging.getLogger(__name__)


# -- S1 ---------------------------------------------------------------------

def _shell_start(d, c):
    t, h = d.tail(c), d.head(c)
    return t if (t + 1) % d.size == h else h


def s1_sites(d):
    if d.n < 2:
        return []
    return [
        DiagramMoveSite(MoveKind.S1, chords=(c,), step=step)
        for c in d.chord_ids
        if is_kink(d, c)
        for step in (1, -1)
    ]


def apply_s1(d, site):
    (c,) = site.chords
    if c not in d.signs or d.n < 2 or not is_kink(d, c):
        raise InvalidSite(f"S1: chord {c} is not a shell")
    if site.step not in (1, -1):
        raise InvalidSite(f"S1: step must be +1 or -1, got {site.step}")
    start = _shell_start(d, c)
    word = d.endpoints
    size = d.size
    shell = [word[start], word[(start + 1) % size]]
    if site.step == 1:
        passed = word[(start + 2) % size]
        new_word = replace_cyclic(word, start, 3, [passed] + shell)
    else:
        passed = word[(start - 1) % size]
        new_word = replace_cyclic(word, start - 1, 3, shell + [passed])
    return GaussDiagram(new_word, d.signs)


# -- S2 ---------------------------------------------------------------------

def _wrap(chord, inner, over_first):
    first, second = (Role.OVER, Role.UNDER) if over_first else (Role.UNDER, Role.OVER)
    return [EndpointRef(chord, first), inner, EndpointRef(chord, second)]


def s2_report(before, after, c1, c2, c3, c4):
    """
    Check the S2 constraints between the diagram without shells (before) and
    the one with shells c3, c4 (after).

    Returns:
        dict: The signs and indices involved and an "ok" flag
    """
    pb, pa = index_profile(before), index_profile(after)
    report = {
        "c1": c1, "c2": c2, "c3": c3, "c4": c4,
        "w3": after.sign(c3), "w4": after.sign(c4),
        "ind3": pa.index(c3), "ind4": pa.index(c4),
        "ind1": (pb.index(c1), pa.index(c1)),
        "ind2": (pb.index(c2), pa.index(c2)),
    }
    report["ok"] = (
        report["w3"] == -report["w4"]
        and report["ind3"] == report["ind4"]
        and report["ind1"][0] == report["ind1"][1]
        and report["ind2"][0] == report["ind2"][1]
    )
    return report


def _s2_pair(d, i):
    size = d.size
    if size < 4 or not 0 <= i < size:
        return None
    p, q = d.endpoints[i], d.endpoints[(i + 1) % size]
    if p.chord == q.chord:
        return None
    return p, q


def _s2_window(d, i):
    """Tokens of an S2 shell window starting at i, or None."""
    size = d.size
    if size < 8 or not 0 <= i < size:
        return None
    t = [d.endpoints[(i + k) % size] for k in range(6)]
    c4, c2, c3, c1 = t[0].chord, t[1].chord, t[3].chord, t[4].chord
    if t[2].chord != c4 or t[5].chord != c3:
        return None
    if len({c1, c2, c3, c4}) != 4:
        return None
    if d.sign(c3) != -d.sign(c4):
        return None
    return t


def s2_sites(d):
    sites = []
    for i in range(d.size):
        if _s2_pair(d, i) is not None:
            sites.extend(DiagramMoveSite(MoveKind.S2, (i,), sign=s) for s in (1, -1))
        if _s2_window(d, i) is not None and _s2_remove_candidate(d, i) is not None:
            sites.append(DiagramMoveSite(MoveKind.S2, (i,), remove=True))
    return sites


def _s2_remove_candidate(d, i):
    t = _s2_window(d, i)
    if t is None:
        return None
    c4, c2, c3, c1 = t[0].chord, t[1].chord, t[3].chord, t[4].chord
    signs = {c: s for c, s in d.signs.items() if c not in (c3, c4)}
    reduced = GaussDiagram(replace_cyclic(d.endpoints, i, 6, [t[4], t[1]]), signs)
    if not s2_report(reduced, d, c1, c2, c3, c4)["ok"]:
        return None
    return reduced


def apply_s2(d, site):
    """
    Apply an S2 move.

    Raises:
        InvalidSite: If the site does not match d
        S2ConstraintUnsatisfiable: If no sign/direction choice meets the constraints
    """
    (i,) = site.positions
    if site.remove:
        reduced = _s2_remove_candidate(d, i)
        if reduced is None:
            raise InvalidSite(f"S2: no removable shell pair at {i}")
        return reduced

    pair = _s2_pair(d, i)
    if pair is None:
        raise InvalidSite(f"S2: positions {i}, {i + 1} are not endpoints of two chords")
    p, q = pair
    c1, c2 = p.chord, q.chord
    c3 = d.fresh_chord_id()
    c4 = c3 + 1
    preferred = check_sign(site.sign)
    for w3, dir3, dir4 in itertools.product((preferred, -preferred), (True, False), (True, False)):
        word = replace_cyclic(d.endpoints, i, 2, _wrap(c4, q, dir4) + _wrap(c3, p, dir3))
        signs = dict(d.signs)
        signs[c3], signs[c4] = w3, -w3
        candidate = GaussDiagram(word, signs)
        if s2_report(d, candidate, c1, c2, c3, c4)["ok"]:
            logger.debug("S2 at %d: w3=%+d dir3=%s dir4=%s", i, w3, dir3, dir4)
            return candidate
    raise S2ConstraintUnsatisfiable(f"S2 at {i}: no shell choice keeps the indices")


def s2_new_chords(before, after, site):
    """Chords (c1, c2, c3, c4) of an S2 add move, read off the two diagrams."""
    (i,) = site.positions
    c1 = before.endpoints[i].chord
    c2 = before.endpoints[(i + 1) % before.size].chord
    c3 = before.fresh_chord_id()
    return c1, c2, c3, c3 + 1
