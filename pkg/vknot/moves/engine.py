"""
Dispatch for diagram moves: site enumeration, application and random choice.
"""
import logging

from ..errors import InvalidSite
from ..utils import make_rng, random_permutation
from . import reidemeister, shell
from .sites import DiagramMoveSite, MoveKind

logger = logging.getLogger(__name__)

_ENUMERATORS = {
    MoveKind.R1_ADD: reidemeister.r1_add_sites,
    MoveKind.R1_REMOVE: reidemeister.r1_remove_sites,
    MoveKind.R2_ADD: reidemeister.r2_add_sites,
    MoveKind.R2_REMOVE: reidemeister.r2_remove_sites,
    MoveKind.R3: reidemeister.r3_sites,
    MoveKind.S1: shell.s1_sites,
    MoveKind.S2: shell.s2_sites,
}

_APPLIERS = {
    MoveKind.R1_ADD: reidemeister.apply_r1_add,
    MoveKind.R1_REMOVE: reidemeister.apply_r1_remove,
    MoveKind.R2_ADD: reidemeister.apply_r2_add,
    MoveKind.R2_REMOVE: reidemeister.apply_r2_remove,
    MoveKind.R3: reidemeister.apply_r3,
    MoveKind.S1: shell.apply_s1,
    MoveKind.S2: shell.apply_s2,
}

GROWING_KINDS = (MoveKind.R1_ADD, MoveKind.R2_ADD)


def enumerate_moves(d, kind):
    """
    All applicable sites of one move kind.

    Args:
        d: GaussDiagram
        kind: MoveKind or its string value

    Returns:
        list: DiagramMoveSite instances in a deterministic order
    """
    return _ENUMERATORS[MoveKind(kind)](d)


def apply_move(d, site):
    """
    Apply a diagram move; the writhe polynomial is unchanged.

    Raises:
        InvalidSite: If the site does not apply to d
        S2ConstraintUnsatisfiable: For S2 sites without an admissible shell choice
    """
    try:
        kind = MoveKind(site.kind)
    except ValueError:
        raise InvalidSite(f"unknown move kind {site.kind!r}") from None
    try:
        result = _APPLIERS[kind](d, site)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, InvalidSite):
            raise
        raise InvalidSite(f"{kind.value}: {exc}") from exc
    logger.debug("%s %s: %d -> %d chords", kind.value, site.positions or site.chords, d.n, result.n)
    return result


def _sample_add_site(d, kind, rng):
    size = max(d.size, 1)
    sign = int(rng.choice([1, -1]))
    over_first = bool(rng.integers(0, 2))
    if kind is MoveKind.R1_ADD:
        return DiagramMoveSite(kind, (int(rng.integers(0, size)),), sign=sign, over_first=over_first)
    g1, g2 = sorted(int(g) for g in rng.integers(0, size, size=2))
    return DiagramMoveSite(kind, (g1, g2), sign=sign, over_first=over_first)


def random_move(d, rng, kinds=tuple(MoveKind), max_chords=None):
    """
    Choose a random applicable move.

    Kinds are tried in random order; growing kinds are skipped once the
    diagram has max_chords chords. Omega1/Omega2 insertions are sampled
    directly, other kinds are enumerated.

    Returns:
        DiagramMoveSite or None: None when no listed kind applies
    """
    rng = make_rng(rng)
    kinds = [MoveKind(k) for k in kinds]
    for index in random_permutation(len(kinds), rng):
        kind = kinds[index]
        if kind in GROWING_KINDS:
            if max_chords is not None and d.n + 2 > max_chords:
                continue
            return _sample_add_site(d, kind, rng)
        sites = enumerate_moves(d, kind)
        if kind is MoveKind.S2 and max_chords is not None and d.n + 2 > max_chords:
            sites = [s for s in sites if s.remove]
        if sites:
            return sites[int(rng.integers(0, len(sites)))]
    return None
