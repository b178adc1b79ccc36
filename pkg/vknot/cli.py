"""
Command-line front end.

    python -m vknot writhe "O1+ O2+ U1+ U2+"
    python -m vknot --format json index "O1+ O2- O3- U1+ U3- U2-"
    python -m vknot fuzz --n 6 --moves 50 --seed 7 --count 10

Exit codes: 0 on success or YES, 1 on NO, 2 on usage or input errors.
"""
import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass

from .diagram import crossing_switch, parse_gauss_code, serialize_gauss_code
from .errors import InvalidSite, SizeLimit, VKnotError
from .graph import build_intersection_graph, export_graph, graphs_isomorphic
from .invariants import graph_writhe_polynomial, index_profile, is_realizable, parse_poly, writhe_polynomial
from .moves import (
    DiagramMoveSite,
    MoveKind,
    MoveTrace,
    apply_move,
    bounded_equivalence_search,
    enumerate_moves,
    random_move,
    replay_trace,
    run_fuzz_campaign,
)
from .realize import decompose, realize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2

SENSE_NOTE = (
    "Ind(c) = sum of w(x) over chords x crossing c, counted +1 when the tail of x "
    "lies on the arc from the head of c to the tail of c, -1 otherwise"
)

EQUIV_NOTE = """\
Prints YES when the two diagrams have the same writhe polynomial.

For intersection graphs of virtual knot diagrams, equal writhe polynomials
mean the graphs are related by omega moves. Arbitrary signed directed
multigraphs only get the polynomial comparison, which carries no
knot-theoretic meaning on its own.
"""


@dataclass(frozen=True)
class CliConfig:
    """Options shared by all subcommands."""
    output_format: str = "text"
    seed: int = 0
    depth_cap: int = 6
    max_vertices: int = 16
    max_search_nodes: int = 50000
    max_search_chords: int = 6
    sense_note: str = SENSE_NOTE

    def __post_init__(self):
        if self.output_format not in ("text", "json"):
            raise ValueError(f"output format must be text or json, got {self.output_format!r}")
        for name in ("depth_cap", "max_vertices", "max_search_nodes", "max_search_chords"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


class _Output:
    def __init__(self, config, path=None):
        self.config = config
        self.path = path
        self.chunks = []

    @property
    def json(self):
        return self.config.output_format == "json"

    def emit(self, text, payload):
        self.chunks.append(json.dumps(payload, sort_keys=True) if self.json else text)

    def flush(self):
        if not self.chunks:
            return
        body = "\n".join(self.chunks) + "\n"
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(body)
        else:
            sys.stdout.write(body)


class InvalidArgument(VKnotError):
    pass


def _poly_payload(f):
    return {"polynomial": str(f), "coeffs": {str(e): c for e, c in f.coeffs.items()}}


def _read_file(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read().strip()


def _read(args, attr="code"):
    value = getattr(args, attr, None)
    if args.file:
        value = _read_file(args.file)
    if value is None:
        raise InvalidArgument(f"missing {attr}: pass it as an argument or with --file")
    return value


# -- subcommands ------------------------------------------------------------

def cmd_validate(args, out):
    d = parse_gauss_code(_read(args))
    code = serialize_gauss_code(d)
    out.emit(f"valid: {d.n} chords, canonical code {code!r}", {"valid": True, "chords": d.n, "code": code})
    return EXIT_OK


def cmd_writhe(args, out):
    f = writhe_polynomial(parse_gauss_code(_read(args)))
    out.emit(str(f), _poly_payload(f))
    return EXIT_OK


def cmd_index(args, out):
    profile = index_profile(parse_gauss_code(_read(args)))
    rows = [{"chord": c, "sign": s, "index": ind} for c, (s, ind) in profile.entries.items()]
    lines = [f"# {out.config.sense_note}", f"{'chord':>6} {'w':>3} {'Ind':>5}"]
    lines += [f"{r['chord']:>6} {r['sign']:>+3d} {r['index']:>5d}" for r in rows]
    lines.append(f"w(D) = {profile.writhe}")
    out.emit("\n".join(lines), {"chords": rows, "writhe": profile.writhe})
    return EXIT_OK


def cmd_graph(args, out):
    g = build_intersection_graph(parse_gauss_code(_read(args)))
    text = export_graph(g, args.graph_format)
    # the export is already machine readable
    out.chunks.append(text)
    return EXIT_OK


def cmd_equiv(args, out):
    positional = [c for c in (args.code1, args.code2) if c is not None]
    codes = []
    for path in (args.file1, args.file2):
        if path:
            codes.append(_read_file(path))
        elif positional:
            codes.append(positional.pop(0))
        else:
            raise InvalidArgument("equiv needs two Gauss codes, as arguments or with --file1/--file2")
    if positional:
        raise InvalidArgument("equiv takes exactly two Gauss codes")
    d1, d2 = (parse_gauss_code(code) for code in codes)
    w1, w2 = writhe_polynomial(d1), writhe_polynomial(d2)
    equal = w1 == w2
    payload = {"w1": _poly_payload(w1), "w2": _poly_payload(w2), "equivalent": equal}
    lines = [f"W1 = {w1}", f"W2 = {w2}"]

    g1, g2 = build_intersection_graph(d1), build_intersection_graph(d2)
    cap = out.config.max_vertices
    if len(g1) <= cap and len(g2) <= cap:
        iso = graphs_isomorphic(g1, g2, max_vertices=cap)
        payload["graphs_isomorphic"] = iso
        lines.append(f"intersection graphs isomorphic: {'yes' if iso else 'no'}")

    if args.depth is not None and equal:
        if args.depth > out.config.depth_cap:
            raise SizeLimit(f"depth {args.depth} exceeds the cap {out.config.depth_cap}")
        trace = bounded_equivalence_search(
            d1, d2, args.depth,
            depth_cap=out.config.depth_cap,
            max_nodes=out.config.max_search_nodes,
            max_chords=out.config.max_search_chords,
        )
        payload["trace"] = None if trace is None else trace.to_dict()
        lines.append(
            f"no move sequence within {args.depth} moves" if trace is None
            else f"move sequence ({len(trace)} moves): {trace.to_json()}"
        )
    lines.append("YES" if equal else "NO")
    out.emit("\n".join(lines), payload)
    return EXIT_OK if equal else EXIT_NO


def cmd_realizable(args, out):
    f = parse_poly(_read(args, "poly"))
    ok = is_realizable(f)
    at_one, slope = f.eval_at_one(), f.derivative_at_one()
    out.emit(
        f"{'YES' if ok else 'NO'} (f(1) = {at_one}, f'(1) = {slope})",
        {"realizable": ok, "f(1)": at_one, "f'(1)": slope},
    )
    return EXIT_OK if ok else EXIT_NO


def cmd_realize(args, out):
    f = parse_poly(_read(args, "poly"))
    d = realize(f)
    code = serialize_gauss_code(d)
    terms = [{**spec.to_dict(), "multiplicity": m} for spec, m in decompose(f)]
    out.emit(code, {"code": code, "generators": terms, "polynomial": str(f)})
    return EXIT_OK


def _kinds(args):
    return [MoveKind(args.kind)] if args.kind else list(MoveKind)


def cmd_move_list(args, out):
    d = parse_gauss_code(_read(args))
    sites = [site for kind in _kinds(args) for site in enumerate_moves(d, kind)]
    out.emit(
        "\n".join(f"{i}: {json.dumps(s.to_dict())}" for i, s in enumerate(sites)) or "no sites",
        {"sites": [s.to_dict() for s in sites]},
    )
    return EXIT_OK


def cmd_move_apply(args, out):
    d = parse_gauss_code(_read(args))
    seed = out.config.seed if args.seed is None else args.seed
    if args.site is not None:
        if not args.kind:
            raise InvalidArgument("--site needs --kind")
        sites = enumerate_moves(d, args.kind)
        if not 0 <= args.site < len(sites):
            raise InvalidSite(f"site index {args.site} outside 0..{len(sites) - 1}")
        site = sites[args.site]
    elif args.site_json:
        site = DiagramMoveSite.from_dict(json.loads(args.site_json))
    else:
        site = random_move(d, seed, kinds=_kinds(args))
        if site is None:
            raise InvalidSite("no applicable move")
    result = apply_move(d, site)
    trace = MoveTrace.starting_at(d, seed)
    trace.record(site)
    code = serialize_gauss_code(result, relabel=False)
    out.emit(
        f"{code}\nseed: {seed}\ntrace: {trace.to_json()}",
        {"code": code, "seed": seed, "trace": trace.to_dict()},
    )
    return EXIT_OK


def cmd_move_replay(args, out):
    trace = MoveTrace.from_json(_read(args, "trace"))
    d, g = replay_trace(trace)
    code = serialize_gauss_code(d, relabel=False)
    w = graph_writhe_polynomial(g)
    out.emit(
        f"{code}\ngraph W = {w}",
        {"code": code, "graph_writhe": _poly_payload(w), "steps": len(trace)},
    )
    return EXIT_OK


def cmd_switch(args, out):
    d = parse_gauss_code(_read(args))
    result = crossing_switch(d, args.chord)
    code = serialize_gauss_code(result, relabel=False)
    out.emit(code, {"code": code, "chord": args.chord})
    return EXIT_OK


def cmd_fuzz(args, out):
    seed = out.config.seed if args.seed is None else args.seed
    reports = run_fuzz_campaign(args.n, args.moves, seed, count=args.count, workers=args.workers)
    failed = [r for r in reports if not r.passed]
    lines = [f"seed {r.seed}: {'PASS' if r.passed else 'FAIL'} "
             f"({len(r.trace)} steps, {len(r.s2_checks)} S2 checks, {r.s1_checks} S1 checks)"
             for r in reports]
    for r in failed:
        lines += [f"  step {f.step}: {f.check}: {f.detail}" for f in r.failures]
        lines.append(f"  trace: {r.trace.to_json()}")
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} runs passed")
    out.emit("\n".join(lines), {"runs": [r.to_dict() for r in reports], "failed": len(failed)})
    return EXIT_OK if not failed else EXIT_NO


# -- parser -----------------------------------------------------------------

def _add_input(parser, name="code", help="Gauss code, e.g. 'O1+ O2+ U1+ U2+'"):
    parser.add_argument(name, nargs="?", help=help)
    parser.add_argument("--file", help=f"read the {name} from a file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vknot",
        description="Writhe polynomials, intersection graphs and moves of virtual knot diagrams",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s writhe "O1+ O2+ U1+ U2+"
  %(prog)s equiv "O1+ O2+ U1+ U2+" "O1+ U1+ O2+ O3+ U2+ U3+" --depth 1
  %(prog)s realize "t^2 - 2t + 1"
        """,
    )
    parser.add_argument("--format", dest="output_format", default="text", choices=["text", "json"])
    parser.add_argument("--out", help="write the output to a file instead of stdout")
    parser.add_argument("--seed", dest="global_seed", type=int, default=0)
    parser.add_argument("--depth-cap", type=int, default=6)
    parser.add_argument("--max-vertices", type=int, default=16)
    parser.add_argument("--max-search-nodes", type=int, default=50000)
    parser.add_argument("--max-search-chords", type=int, default=6)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a Gauss code and report errors")
    _add_input(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("writhe", help="writhe polynomial W(t)")
    _add_input(p)
    p.set_defaults(handler=cmd_writhe)

    p = sub.add_parser("index", help="per-chord sign and index table")
    _add_input(p)
    p.set_defaults(handler=cmd_index)

    p = sub.add_parser("graph", help="export the intersection graph")
    _add_input(p)
    p.add_argument("--format", dest="graph_format", default="json", choices=["dot", "json"])
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser(
        "equiv",
        help="compare writhe polynomials (YES/NO)",
        description=EQUIV_NOTE,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("code1", nargs="?")
    p.add_argument("code2", nargs="?")
    p.add_argument("--file1", help="read the first Gauss code from a file")
    p.add_argument("--file2", help="read the second Gauss code from a file")
    p.add_argument("--depth", type=int, help="also search for a move sequence of at most this length")
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("realizable", help="test f(1) = f'(1) = 0")
    _add_input(p, "poly", "Laurent polynomial, e.g. 't^2 - 2t + 1'")
    p.set_defaults(handler=cmd_realizable)

    p = sub.add_parser("realize", help="Gauss code with a given writhe polynomial")
    _add_input(p, "poly", "Laurent polynomial, e.g. 't^2 - 2t + 1'")
    p.set_defaults(handler=cmd_realize)

    p = sub.add_parser("move", help="enumerate, apply or replay moves")
    move_sub = p.add_subparsers(dest="move_command", required=True)
    kinds = [k.value for k in MoveKind]
    m = move_sub.add_parser("list")
    _add_input(m)
    m.add_argument("--kind", choices=kinds)
    m.set_defaults(handler=cmd_move_list)
    m = move_sub.add_parser("apply")
    _add_input(m)
    m.add_argument("--kind", choices=kinds)
    m.add_argument("--site", type=int, help="index into 'move list' output for --kind")
    m.add_argument("--site-json", help="explicit site record")
    m.add_argument("--seed", type=int, help="seed for a random move when no site is given")
    m.set_defaults(handler=cmd_move_apply)
    m = move_sub.add_parser("replay")
    _add_input(m, "trace", "trace JSON")
    m.set_defaults(handler=cmd_move_replay)

    p = sub.add_parser("switch", help="crossing switch at one chord")
    _add_input(p)
    p.add_argument("chord", type=int)
    p.set_defaults(handler=cmd_switch)

    p = sub.add_parser("fuzz", help="random move invariance fuzzing")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--moves", type=int, default=50)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_fuzz)
    return parser


def configure_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("vknot").setLevel(level)


def run(argv=None):
    """
    Run one subcommand.

    Args:
        argv: Argument list without the program name; sys.argv[1:] by default

    Returns:
        int: Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    configure_logging(args.verbose)
    try:
        config = CliConfig(
            output_format=args.output_format,
            seed=args.global_seed,
            depth_cap=args.depth_cap,
            max_vertices=args.max_vertices,
            max_search_nodes=args.max_search_nodes,
            max_search_chords=args.max_search_chords,
        )
    except ValueError as exc:
        print(f"vknot: {exc}", file=sys.stderr)
        return EXIT_ERROR
    logger.debug("config %s", asdict(config))
    out = _Output(config, args.out)
    try:
        code = args.handler(args, out)
    except (VKnotError, OSError, ValueError) as exc:
        print(f"vknot: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out.flush()
    return code


def main():
    sys.exit(run())
