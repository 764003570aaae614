"""Command-line front end.

Exit codes: 0 success, 1 domain error (JSON diagnostics on stderr),
2 usage error.  All outputs are deterministic for identical inputs.
"""

import argparse
import json
import sys

from .arcsys import build_arc_system, raw_crossing_count, trace_components
from .census import count_series, orbit_count_torus, slope_classes
from .cover import TilingBall
from .engine import GeodesicEngine
from .errors import SwlError
from .surface import DISK, build_complex, parse_surface_spec, search_generating_sets
from .svg import emit_svg
from .words import format_word, parse_word

DEFAULT_LENGTHS = (64, 128, 256, 512, 1024, 2048)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _load_complex(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SwlError(f"cannot read spec {path!r}: {exc}") from exc
    return build_complex(parse_surface_spec(text))


def _emit(payload, as_json, human_lines):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def cmd_complex(args):
    cx = _load_complex(args.spec)
    info = cx.to_json_dict()
    lines = [f"genus {cx.genus}  boundary {cx.boundary_count}  euler {cx.euler_char}"]
    lines += [f"face {f['id']}: {f['kind']}  {f['word']}" for f in info["faces"]]
    _emit(info, args.json, lines)
    return 0


def cmd_lambda(args):
    cx = _load_complex(args.spec)
    arcs = build_arc_system(cx)
    census = trace_components(arcs)
    crossings = {g: 0 for g in cx.generators}
    for _, seq in census.components:
        for g in seq:
            crossings[g] += 1
    payload = {
        "curves": census.curves,
        "arcs": census.arcs,
        "components": [{"type": kind, "crossings": list(seq)}
                       for kind, seq in census.components],
        "edge_crossings": crossings,
        "weight": "1/2",
    }
    lines = [f"curves {census.curves}  arcs {census.arcs}"]
    lines += [f"{kind}: crosses {' '.join(seq)}" for kind, seq in census.components]
    lines += [f"edge {g}: crossed {crossings[g]} times" for g in cx.generators]
    _emit(payload, args.json, lines)
    return 0


def cmd_reduce(args):
    cx = _load_complex(args.spec)
    word = parse_word(args.word, cx.generators)
    engine = GeodesicEngine(cx)
    length, witness = engine.shortest_word(word)
    payload = {"input": args.word, "length": length,
               "witness": format_word(witness, cx.generators)}
    _emit(payload, args.json,
          [f"length {length}", f"witness {payload['witness']}"])
    return 0


def cmd_clength(args):
    cx = _load_complex(args.spec)
    word = parse_word(args.word, cx.generators)
    engine = GeodesicEngine(cx)
    length, witness = engine.cyclic_shortest(word)
    payload = {"input": args.word, "length": length,
               "witness": format_word(witness, cx.generators)}
    _emit(payload, args.json,
          [f"conjugacy length {length}", f"witness {payload['witness']}"])
    return 0


def cmd_oracle(args):
    cx = _load_complex(args.spec)
    ball = TilingBall(cx, cap=args.cap)
    payload = {}
    lines = []
    if args.word:
        word = parse_word(args.word, cx.generators)
        n = ball.oracle_word_length(word)
        payload["length"] = n
        lines.append(f"word length {n}")
        radius = args.radius if args.radius is not None else len(word) + 4
        t = ball.oracle_conjugacy_length(word, radius)
        payload["translation_length"] = t
        payload["radius"] = radius
        lines.append(f"translation length {t} (ball radius {radius})")
    if args.ball is not None:
        ball.build_ball(args.ball)
    payload["stats"] = ball.stats()
    lines.append("ball stats " + json.dumps(ball.stats(), sort_keys=True))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(ball.to_dot())
        lines.append(f"wrote {args.dot}")
    _emit(payload, args.json, lines)
    return 0


def cmd_count(args):
    cx = _load_complex(args.spec)
    lengths = [int(t) for t in args.lengths.split(",")] if args.lengths else list(DEFAULT_LENGTHS)
    lengths = [L for L in lengths if L <= args.max_length]
    if args.mode == "engine" and args.jobs > 1:
        counts = _parallel_engine_counts(args.spec, lengths, args.jobs)
        from .census import CountSeries, fit_exponent
        pairs = tuple(zip(lengths, counts))
        exponent, constant = fit_exponent(pairs)
        series = CountSeries(pairs, exponent, constant)
    else:
        series = count_series(cx, lengths, mode=args.mode)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(series.to_csv())
    basis = " ".join(cx.generators)
    if args.json:
        print(series.summary_json(args.mode, basis))
    else:
        for L, c in series.pairs:
            print(f"L={L} count={c}")
        print(f"exponent {series.exponent:.4f}  constant {series.constant:.4f}")
    return 0


def _parallel_engine_counts(spec_path, lengths, jobs):
    """Engine-mode sweep split over slope classes; per-process engines."""
    from concurrent.futures import ProcessPoolExecutor

    classes = slope_classes(max(lengths))
    chunks = [classes[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = pool.map(_count_chunk, [(spec_path, chunk, lengths) for chunk in chunks])
        totals = [0] * len(lengths)
        for partial in results:
            totals = [a + b for a, b in zip(totals, partial)]
    return totals


def _count_chunk(job):
    spec_path, chunk, lengths = job
    from .census import christoffel_word

    cx = _load_complex(spec_path)
    engine = GeodesicEngine(cx)
    totals = [0] * len(lengths)
    for p, q in chunk:
        ell = engine.cyclic_shortest(christoffel_word(p, q))[0]
        for i, L in enumerate(lengths):
            if ell <= L:
                totals[i] += 1
    return totals


def cmd_svg(args):
    cx = _load_complex(args.spec)
    arcs = build_arc_system(cx)
    text = emit_svg(cx, arcs)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    return 0


def cmd_search(args):
    def predicate(cx):
        if args.all_disk and any(f.kind != DISK for f in cx.faces):
            return False
        if args.genus is not None and cx.genus != args.genus:
            return False
        if args.boundary is not None and cx.boundary_count != args.boundary:
            return False
        if args.faces is not None and len(cx.faces) != args.faces:
            return False
        return True

    specs = search_generating_sets(args.n, predicate, max_results=args.max_results)
    if args.json:
        payload = [build_complex(s).to_json_dict() for s in specs]
        print(json.dumps({"count": len(specs), "complexes": payload}, sort_keys=True))
    else:
        for s in specs:
            print(build_complex(s).to_spec_text(), end="")
            print("---")
        print(f"{len(specs)} matching generating sets")
    return 0


def _build_parser():
    parser = _Parser(prog="swl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("complex", cmd_complex, help="trace faces, report genus/boundary")
    p.add_argument("--spec", required=True)
    p.add_argument("--json", action="store_true")

    p = add("lambda", cmd_lambda, help="arc-system census and invariant report")
    p.add_argument("--spec", required=True)
    p.add_argument("--json", action="store_true")

    p = add("reduce", cmd_reduce, help="word length and geodesic witness")
    p.add_argument("--spec", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")

    p = add("clength", cmd_clength, help="conjugacy length and cyclic witness")
    p.add_argument("--spec", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")

    p = add("oracle", cmd_oracle, help="universal-cover BFS length and ball stats")
    p.add_argument("--spec", required=True)
    p.add_argument("--word")
    p.add_argument("--radius", type=int, help="ball radius for translation length")
    p.add_argument("--ball", type=int, help="also build a layered ball of this radius")
    p.add_argument("--cap", type=int, help="vertex cap override")
    p.add_argument("--dot", help="write DOT export of the 1-skeleton")
    p.add_argument("--json", action="store_true")

    p = add("count", cmd_count, help="curve census sweep on the one-holed torus")
    p.add_argument("--spec", required=True)
    p.add_argument("--mode", choices=("fast", "engine"), default="fast")
    p.add_argument("--max-length", type=int, default=2048)
    p.add_argument("--lengths", help="comma-separated L values")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", help="write L,count series to this path")
    p.add_argument("--json", action="store_true")

    p = add("svg", cmd_svg, help="render polygons and arc system")
    p.add_argument("--spec", required=True)
    p.add_argument("--output", "-o")

    p = add("search", cmd_search, help="enumerate generating sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all-disk", action="store_true")
    p.add_argument("--genus", type=int)
    p.add_argument("--boundary", type=int)
    p.add_argument("--faces", type=int)
    p.add_argument("--max-results", type=int)
    p.add_argument("--json", action="store_true")

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SwlError as exc:
        sys.stderr.write(json.dumps(
            {"error": {"type": type(exc).__name__, "message": str(exc)}},
            sort_keys=True) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
