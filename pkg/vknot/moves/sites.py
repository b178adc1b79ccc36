"""
Move sites for diagram-level rewrites.
"""
from dataclasses import dataclass
from enum import Enum


class MoveKind(str, Enum):
    R1_ADD = "R1_add"
    R1_REMOVE = "R1_remove"
    R2_ADD = "R2_add"
    R2_REMOVE = "R2_remove"
    R3 = "R3"
    S1 = "S1"
    S2 = "S2"


@dataclass(frozen=True)
class DiagramMoveSite:
    """
    Locator and free choices of one diagram move.

    positions:
        R1_add (gap,); R2_add (gap1, gap2) with gap1 <= gap2; R3 the starts of the
        three adjacent endpoint pairs; S2 the start of the endpoint pair (add) or
        of the six-endpoint window (remove). A gap g means "insert before
        position g".
    chords:
        R1_remove (chord,); R2_remove (c, c'); S1 (shell,)
    sign:
        sign of the inserted chord (R1), of the outer chord (R2), or the
        preferred sign of the shell wrapping the first endpoint (S2)
    over_first:
        R1_add: the first inserted endpoint is the over endpoint;
        R2_add: the endpoints at the first gap are the over endpoints
    step:
        S1: +1 slides the shell past the next endpoint, -1 past the previous one
    remove:
        S2: remove the two shells instead of adding them
    """
    kind: MoveKind
    positions: tuple = ()
    chords: tuple = ()
    sign: int = 1
    over_first: bool = True
    step: int = 1
    remove: bool = False

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "positions": list(self.positions),
            "chords": list(self.chords),
            "sign": self.sign,
            "over_first": self.over_first,
            "step": self.step,
            "remove": self.remove,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            MoveKind(data["kind"]),
            tuple(int(p) for p in data.get("positions", ())),
            tuple(int(c) for c in data.get("chords", ())),
            int(data.get("sign", 1)),
            bool(data.get("over_first", True)),
            int(data.get("step", 1)),
            bool(data.get("remove", False)),
        )
