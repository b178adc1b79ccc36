"""
Demo script: writhe polynomial of the virtual trefoil, its intersection graph,
and invariance under diagram moves and omega moves.
"""
from vknot.diagram import crossing_switch, parse_gauss_code, serialize_gauss_code
from vknot.graph import OmegaKind, apply_omega, build_intersection_graph, export_graph, random_omega_site
from vknot.invariants import graph_writhe_polynomial, index_profile, writhe_polynomial
from vknot.moves import MoveKind, apply_move, bounded_equivalence_search, enumerate_moves


def main():
    print("=" * 60)
    print("Virtual Trefoil Writhe Polynomial Demo")
    print("=" * 60)

    code = "O1+ O2+ U1+ U2+"
    d = parse_gauss_code(code)
    print(f"\nDiagram:")
    print(f"  Gauss code: {code}")
    print(f"  Chords: {d.n}")

    print("\n[1] Chord indices...")
    profile = index_profile(d)
    for c, (sign, ind) in profile.entries.items():
        print(f"  chord {c}: w = {sign:+d}, Ind = {ind:+d}")
    print(f"  writhe w(D) = {profile.writhe}")

    w = writhe_polynomial(d)
    print(f"\n[2] Writhe polynomial:")
    print(f"  W(t) = {w}")
    print(f"  W(1) = {w.eval_at_one()}, W'(1) = {w.derivative_at_one()}")

    print("\n[3] Intersection graph (DOT):")
    g = build_intersection_graph(d)
    for line in export_graph(g, "dot").splitlines():
        print(f"  {line}")
    print(f"  graph W(t) = {graph_writhe_polynomial(g)}")

    print("\n[4] Diagram moves:")
    for kind in (MoveKind.R1_ADD, MoveKind.S2):
        site = enumerate_moves(d, kind)[0]
        after = apply_move(d, site)
        print(f"  {kind.value:<8} -> {serialize_gauss_code(after)}")
        print(f"           W(t) = {writhe_polynomial(after)}")

    print("\n[5] Omega moves on the graph (seed 0):")
    h = g
    for kind in (OmegaKind.OMEGA1_ADD, OmegaKind.OMEGA2_ADD, OmegaKind.OMEGA0_ADD):
        site = random_omega_site(h, 0, kind)
        h = apply_omega(h, site)
        print(f"  {kind.value:<9} -> {len(h)} vertices, W(t) = {graph_writhe_polynomial(h)}")

    print("\n[6] Bounded search: trefoil vs trefoil with a kink")
    kinked = parse_gauss_code("O1+ U1+ O2+ O3+ U2+ U3+")
    trace = bounded_equivalence_search(d, kinked, 1)
    if trace is not None:
        print(f"  ✓ FOUND: {[s.kind.value for s in trace.steps]}")
    else:
        print("  ✗ NOT FOUND within depth 1")

    print("\n[7] Crossing switch at chord 1:")
    switched = crossing_switch(d, 1)
    print(f"  {serialize_gauss_code(switched, relabel=False)}")
    print(f"  W(t) = {writhe_polynomial(switched)}")

    print("\n" + "=" * 60)


if __name__ == "__main__":
    main()
