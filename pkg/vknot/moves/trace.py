"""
Replayable move traces.
"""
import json
from dataclasses import dataclass, field

from ..diagram import parse_gauss_code, serialize_gauss_code
from ..graph import OmegaSite, apply_omega, build_intersection_graph
from .engine import apply_move
from .sites import DiagramMoveSite


@dataclass
class MoveTrace:
    """
    Moves applied to a start diagram (and, for omega sites, to its
    intersection graph), in order.

    start: Gauss code of the start diagram with its original chord ids
    steps: DiagramMoveSite / OmegaSite instances
    seed: seed that produced the trace, when it was generated randomly
    """
    start: str
    steps: list = field(default_factory=list)
    seed: int = None

    @classmethod
    def starting_at(cls, d, seed=None):
        return cls(serialize_gauss_code(d, relabel=False), [], seed)

    def record(self, site):
        self.steps.append(site)

    def __len__(self):
        return len(self.steps)

    def to_dict(self):
        return {
            "start": self.start,
            "seed": self.seed,
            "steps": [
                {"target": "diagram" if isinstance(s, DiagramMoveSite) else "graph", **s.to_dict()}
                for s in self.steps
            ],
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        steps = []
        for item in data.get("steps", []):
            item = dict(item)
            target = item.pop("target", "diagram")
            steps.append(DiagramMoveSite.from_dict(item) if target == "diagram" else OmegaSite.from_dict(item))
        return cls(data["start"], steps, data.get("seed"))


def replay_trace(trace):
    """
    Re-apply a trace.

    Returns:
        tuple: (end diagram, end graph); the graph starts as the intersection
        graph of the start diagram and only receives the omega steps
    """
    d = parse_gauss_code(trace.start)
    g = build_intersection_graph(d)
    for site in trace.steps:
        if isinstance(site, DiagramMoveSite):
            d = apply_move(d, site)
        else:
            g = apply_omega(g, site)
    return d, g
