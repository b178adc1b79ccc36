import json

import numpy as np
import pytest

from vknot.diagram import GaussDiagram, parse_gauss_code, random_diagram, sense_matrix, serialize_gauss_code
from vknot.errors import InvalidSite, SizeLimit
from vknot.graph import build_intersection_graph
from vknot.invariants import LaurentPolynomial, index_profile, writhe_polynomial
from vknot.moves import (
    DiagramMoveSite,
    MoveKind,
    MoveTrace,
    apply_move,
    bounded_equivalence_search,
    canonical_form,
    enumerate_moves,
    fuzz,
    fuzz_invariance,
    random_move,
    replay_trace,
    run_fuzz_campaign,
    s2_new_chords,
    s2_report,
)
from vknot.utils import make_rng

KINKED_TREFOIL = "O1+ U1+ O2+ O3+ U2+ U3+"
R3_CODE = "O1+ O2+ U1+ O3+ U2+ U3+"


def test_enumeration_examples(trefoil):
    assert enumerate_moves(parse_gauss_code("O1+ U1+"), MoveKind.R1_REMOVE) == [
        DiagramMoveSite(MoveKind.R1_REMOVE, chords=(1,))
    ]
    assert len(enumerate_moves(GaussDiagram.empty(), MoveKind.R1_ADD)) == 4
    assert enumerate_moves(trefoil, MoveKind.R2_REMOVE) == []
    assert enumerate_moves(trefoil, "S1") == []


def test_r1_round_trip(trefoil):
    for site in enumerate_moves(trefoil, MoveKind.R1_ADD):
        kinked = apply_move(trefoil, site)
        assert kinked.n == 3
        assert writhe_polynomial(kinked) == writhe_polynomial(trefoil)
        assert apply_move(kinked, DiagramMoveSite(MoveKind.R1_REMOVE, chords=(3,))) == trefoil


def test_r2_round_trip(p2):
    for site in enumerate_moves(p2, MoveKind.R2_ADD):
        bigger = apply_move(p2, site)
        outer, inner = 4, 5
        assert bigger.sign(outer) == -bigger.sign(inner)
        assert DiagramMoveSite(MoveKind.R2_REMOVE, chords=(outer, inner)) in enumerate_moves(bigger, MoveKind.R2_REMOVE)
        assert apply_move(bigger, DiagramMoveSite(MoveKind.R2_REMOVE, chords=(outer, inner))) == p2


def test_r3_site():
    d = parse_gauss_code(R3_CODE)
    site = DiagramMoveSite(MoveKind.R3, (0, 2, 4))
    assert site in enumerate_moves(d, MoveKind.R3)
    after = apply_move(d, site)
    assert serialize_gauss_code(after, relabel=False) == "O2+ O1+ O3+ U1+ U3+ U2+"
    assert index_profile(after) == index_profile(d)
    assert apply_move(after, site) == d


def test_r3_needs_kept_indices():
    d = parse_gauss_code("O1+ O2- U1+ O3+ U2- U3+")
    with pytest.raises(InvalidSite):
        apply_move(d, DiagramMoveSite(MoveKind.R3, (0, 2, 4)))


def test_s1_keeps_graph():
    d = parse_gauss_code("O1+ O2- U1+ O3+ U3+ U2-")
    sites = enumerate_moves(d, MoveKind.S1)
    assert DiagramMoveSite(MoveKind.S1, chords=(3,), step=1) in sites
    for site in sites:
        after = apply_move(d, site)
        assert build_intersection_graph(after) == build_intersection_graph(d)
        assert writhe_polynomial(after) == writhe_polynomial(d)
    moved = apply_move(d, DiagramMoveSite(MoveKind.S1, chords=(3,), step=1))
    assert serialize_gauss_code(moved, relabel=False) == "O1+ O2- U1+ U2- O3+ U3+"


def test_s2_constraints(trefoil, p2):
    for d in (trefoil, p2, random_diagram(5, 3)):
        for site in enumerate_moves(d, MoveKind.S2):
            if site.remove:
                continue
            after = apply_move(d, site)
            report = s2_report(d, after, *s2_new_chords(d, after, site))
            assert report["ok"], report
            assert report["w3"] == -report["w4"]
            assert report["ind3"] == report["ind4"]
            assert writhe_polynomial(after) == writhe_polynomial(d)


def test_s2_add_then_remove(p2):
    for site in enumerate_moves(p2, MoveKind.S2):
        (i,) = site.positions
        if site.remove or i >= p2.size - 1:
            continue
        after = apply_move(p2, site)
        removal = DiagramMoveSite(MoveKind.S2, (i,), remove=True)
        assert removal in enumerate_moves(after, MoveKind.S2)
        assert apply_move(after, removal) == p2


def test_invalid_sites(trefoil):
    with pytest.raises(InvalidSite):
        apply_move(trefoil, DiagramMoveSite(MoveKind.R1_REMOVE, chords=(1,)))
    with pytest.raises(InvalidSite):
        apply_move(trefoil, DiagramMoveSite(MoveKind.R1_ADD, (9,)))
    with pytest.raises(InvalidSite):
        apply_move(trefoil, DiagramMoveSite(MoveKind.R2_ADD, (3, 1)))
    with pytest.raises(InvalidSite):
        apply_move(trefoil, DiagramMoveSite(MoveKind.S1, chords=(1,)))
    with pytest.raises(InvalidSite):
        apply_move(trefoil, DiagramMoveSite(MoveKind.S2, (0,), remove=True))


def test_every_site_keeps_the_polynomial():
    for seed in range(40):
        d = random_diagram(1 + seed % 5, seed)
        w = writhe_polynomial(d)
        for kind in MoveKind:
            for site in enumerate_moves(d, kind):
                assert writhe_polynomial(apply_move(d, site)) == w, site


def test_random_move_is_seeded(p2):
    assert random_move(p2, 9) == random_move(p2, 9)
    site = random_move(p2, 0, kinds=[MoveKind.R1_ADD, MoveKind.R2_ADD], max_chords=3)
    assert site is None


def test_canonical_form_ignores_rotation_and_labels():
    d = parse_gauss_code("O1+ O2- O3- U1+ U3- U2-")
    rotated = parse_gauss_code("U7- U5- O9+ O5- O7- U9+")
    assert canonical_form(d) == canonical_form(rotated)
    assert canonical_form(d) != canonical_form(parse_gauss_code("O1+ O2+ U1+ U2+"))
    assert canonical_form(GaussDiagram.empty()) == ()


def test_search_depth_zero(trefoil):
    trace = bounded_equivalence_search(trefoil, trefoil, 0)
    assert trace is not None and len(trace) == 0


def test_search_finds_kink(trefoil):
    target = parse_gauss_code(KINKED_TREFOIL)
    trace = bounded_equivalence_search(trefoil, target, 1)
    assert trace is not None
    assert [s.kind for s in trace.steps] == [MoveKind.R1_ADD]
    end, _ = replay_trace(trace)
    assert canonical_form(end) == canonical_form(target)


def test_search_rejects_different_polynomials(trefoil, p2):
    assert bounded_equivalence_search(trefoil, p2, 6) is None


def test_search_limits(trefoil):
    with pytest.raises(SizeLimit):
        bounded_equivalence_search(trefoil, trefoil, 7)
    with pytest.raises(SizeLimit):
        bounded_equivalence_search(random_diagram(7, 0), trefoil, 1)


def test_trace_json_round_trip(p2):
    report = fuzz_invariance(4, 15, 21)
    trace = MoveTrace.from_json(report.trace.to_json())
    assert trace.to_dict() == report.trace.to_dict()
    assert replay_trace(trace) == replay_trace(report.trace)

    manual = MoveTrace.starting_at(p2, seed=1)
    manual.record(DiagramMoveSite(MoveKind.R1_ADD, (2,), sign=-1))
    end, g = replay_trace(MoveTrace.from_json(json.loads(manual.to_json())))
    assert end == apply_move(p2, DiagramMoveSite(MoveKind.R1_ADD, (2,), sign=-1))
    assert g == build_intersection_graph(p2)


def test_fuzz_without_moves():
    report = fuzz_invariance(5, 0, 1)
    assert report.passed
    assert len(report.trace) == 0


@pytest.mark.parametrize("seed", range(5))
def test_fuzz_passes(seed):
    report = fuzz_invariance(6, 50, seed)
    assert report.passed, [f.to_dict() for f in report.failures]
    assert all(check["ok"] for check in report.s2_checks)


def test_fuzz_detects_a_flipped_sense(monkeypatch):
    def buggy(d):
        S = sense_matrix(d)
        crossing = np.argwhere(S)
        if len(crossing):
            i, j = crossing[0]
            S[i, j] = -S[i, j]
        signs = np.array([d.sign(c) for c in d.chord_ids], dtype=np.int64)
        coeffs = {0: -int(signs.sum())}
        for s, ind in zip(signs, S @ signs):
            coeffs[int(ind)] = coeffs.get(int(ind), 0) + int(s)
        return LaurentPolynomial(coeffs)

    monkeypatch.setattr(fuzz, "writhe_polynomial", buggy)
    reports = [fuzz_invariance(6, 5, seed) for seed in range(3)]
    assert any(not r.passed for r in reports)
    failing = next(r for r in reports if not r.passed)
    assert any(f.check == "diagram/graph" for f in failing.failures)
    assert MoveTrace.from_json(failing.trace.to_json()).start == failing.trace.start


def test_fuzz_campaign_orders_by_seed():
    reports = run_fuzz_campaign(3, 10, 40, count=3)
    assert [r.seed for r in reports] == [40, 41, 42]
    assert all(r.passed for r in reports)


def test_fuzz_corpus():
    rng = make_rng(2024)
    for i in range(40):
        report = fuzz_invariance(i % 9, 50, int(rng.integers(0, 2**31)))
        assert report.passed, (report.seed, [f.to_dict() for f in report.failures])


@pytest.mark.slow
def test_fuzz_full_corpus():
    reports = run_fuzz_campaign(8, 50, 1000, count=500, workers=4)
    failed = [r.seed for r in reports if not r.passed]
    assert failed == []
    for n in range(8):
        assert all(r.passed for r in run_fuzz_campaign(n, 50, 5000 + 100 * n, count=20))
