from .sites import DiagramMoveSite, MoveKind
from .reidemeister import is_kink, is_r2_pair, is_r3_site
from .shell import s2_new_chords, s2_report
from .engine import GROWING_KINDS, apply_move, enumerate_moves, random_move
from .trace import MoveTrace, replay_trace
from .search import (
    DEFAULT_DEPTH_CAP,
    DEFAULT_MAX_CHORDS,
    DEFAULT_MAX_NODES,
    bounded_equivalence_search,
    canonical_form,
)
from .fuzz import FuzzFailure, FuzzReport, fuzz_invariance, run_fuzz_campaign
