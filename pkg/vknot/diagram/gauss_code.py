"""
Gauss code text format and JSON export for Gauss diagrams.

Tokens are `O<id><sign>` or `U<id><sign>`, whitespace separated, read
counterclockwise from the basepoint, e.g. the virtual trefoil `O1+ O2+ U1+ U2+`.
"""
import json
import re

from ..errors import BadToken, GaussCodeError, RoleError, SignMismatch
from ..utils import sign_char
from .gauss_diagram import EndpointRef, GaussDiagram, Role

TOKEN_RE = re.compile(r"^([OU])(\d+)([+-])$")


def parse_gauss_code(text):
    """
    Parse a Gauss code into a diagram.

    Args:
        text: Whitespace-separated tokens; the empty string gives the empty diagram

    Returns:
        GaussDiagram: Diagram whose endpoint word equals the token sequence

    Raises:
        BadToken: If a token is malformed
        RoleError: If a chord does not appear exactly once as O and once as U
        SignMismatch: If the two tokens of one chord disagree in sign
    """
    endpoints = []
    signs = {}
    roles = {}
    for token in text.split():
        match = TOKEN_RE.match(token)
        if match is None:
            raise BadToken(f"malformed token {token!r}")
        role, chord, sign = Role(match.group(1)), int(match.group(2)), match.group(3)
        sign = 1 if sign == "+" else -1
        seen = roles.setdefault(chord, [])
        seen.append(role)
        if len(seen) > 2:
            raise RoleError(f"chord {chord} appears more than twice")
        if len(seen) == 2 and seen[0] == seen[1]:
            raise RoleError(f"chord {chord} has two {role.name} tokens")
        if chord in signs and signs[chord] != sign:
            raise SignMismatch(f"chord {chord} carries both signs")
        signs[chord] = sign
        endpoints.append(EndpointRef(chord, role))
    for chord, seen in roles.items():
        if len(seen) != 2:
            raise RoleError(f"chord {chord} appears only once")
    return GaussDiagram(endpoints, signs)


def first_appearance_labels(d):
    """Map chord id -> 1, 2, ... in order of first appearance on the circle."""
    labels = {}
    for ep in d.endpoints:
        if ep.chord not in labels:
            labels[ep.chord] = len(labels) + 1
    return labels


def relabel(d, labels=None):
    """
    Rename the chords of a diagram.

    Args:
        d: GaussDiagram
        labels: Optional mapping old id -> new id; first-appearance labels by default

    Returns:
        GaussDiagram: The same diagram with renamed chords
    """
    if labels is None:
        labels = first_appearance_labels(d)
    endpoints = [EndpointRef(labels[ep.chord], ep.role) for ep in d.endpoints]
    return GaussDiagram(endpoints, {labels[c]: s for c, s in d.signs.items()})


def serialize_gauss_code(d, relabel=True):
    """
    Write a diagram as a Gauss code starting at circle position 0.

    Args:
        d: GaussDiagram
        relabel: Number chords by first appearance starting at 1 (the canonical form)

    Returns:
        str: Single-space separated tokens
    """
    labels = first_appearance_labels(d) if relabel else {c: c for c in d.chord_ids}
    return " ".join(
        f"{ep.role.value}{labels[ep.chord]}{sign_char(d.sign(ep.chord))}"
        for ep in d.endpoints
    )


def diagram_to_dict(d):
    return {
        "endpoints": [{"chord": ep.chord, "role": ep.role.value} for ep in d.endpoints],
        "signs": {str(c): s for c, s in d.signs.items()},
    }


def diagram_to_json(d):
    """JSON export: {"endpoints": [{"chord", "role"}, ...], "signs": {"<id>": 1|-1}}."""
    return json.dumps(diagram_to_dict(d))


def diagram_from_json(text):
    """
    Inverse of diagram_to_json.

    Raises:
        GaussCodeError: If the document does not describe a valid diagram
    """
    try:
        data = json.loads(text) if isinstance(text, str) else text
        endpoints = [(int(ep["chord"]), Role(ep["role"])) for ep in data["endpoints"]]
        signs = {int(c): int(s) for c, s in data["signs"].items()}
    except (ValueError, KeyError, TypeError) as exc:
        raise GaussCodeError(f"bad diagram JSON: {exc}") from exc
    return GaussDiagram(endpoints, signs)
