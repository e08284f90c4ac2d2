# pylint: disable=C,R
'''
Command line interface

Exit codes: 0 success, 1 failed verification, 2 usage or input error.
'''
import argparse
import itertools
import json
import os
import sys

import numpy as np

from casson import alpha, diagram, invariants, movie, operators, tree
from casson.errors import CassonError
from casson.render import RenderSpec, render_stage, render_svg
from casson.util import time_logging
from casson.util.atomic_file import atomic_write
from casson.util.logger import Logger

DEFAULT_DEPTH = 3
SUITES = ("plane-stats", "c1-stats", "alpha", "genus", "pd-validity", "h1", "unknot", "tree", "end-sum", "determinism")


class VerificationFailed(Exception):
    pass


# input / output

def _resolve(path):
    if os.path.exists(path):
        return path
    name = os.path.splitext(os.path.basename(path))[0]
    fixture = os.path.join(operators.fixtures_dir(), name + ".pd")
    if os.path.exists(fixture):
        return fixture
    raise CassonError("{}: no such file".format(path))


def read_diagram(path):
    path = _resolve(path)
    with open(path) as f:
        text = f.read()
    try:
        if path.endswith(".json"):
            return diagram.loads(text)
        return diagram.parse_pd(text)
    except (ValueError, KeyError) as e:
        raise CassonError("{}: {}".format(path, e))


def read_json(path, loads):
    try:
        with open(path) as f:
            return loads(f.read())
    except OSError as e:
        raise CassonError("{}: {}".format(path, e.strerror))
    except (ValueError, KeyError) as e:
        raise CassonError("{}: {}".format(path, e))


def emit(args, text):
    if getattr(args, "out", None):
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)


def emit_diagram(args, d):
    if args.format == "pd":
        emit(args, d.to_text())
    elif args.format == "svg":
        emit(args, render_stage(d))
    else:
        emit(args, d.dumps())


def emit_json(args, obj):
    emit(args, json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


# tree

def cmd_tree(args, log):
    if args.action == "new":
        emit(args, tree.make_ch_mn(args.m, args.n, args.depth).dumps())
    elif args.action == "refines":
        a = read_json(args.inputs[0], tree.loads)
        b = read_json(args.inputs[1], tree.loads)
        emit_json(args, {"refines": tree.refines(a, b, args.depth)})
    elif args.action == "refine":
        a = read_json(args.inputs[0], tree.loads)
        b = read_json(args.inputs[1], tree.loads)
        emit(args, tree.common_refinement(a, b).dumps())
    elif args.action == "kinkiness":
        t = read_json(args.inputs[0], tree.loads)
        k = tree.first_stage_kinkiness(t)
        emit_json(args, {
            "kappa": [k.positive, k.negative],
            "genus": tree.genus_bound(t),
            "core_framing": tree.core_framing(t),
            "exact": tree.is_exact_kinkiness(t),
        })
    return 0


# diagram

def cmd_diagram(args, log):
    d = read_diagram(args.input)
    if args.action == "validate":
        report = diagram.validate(d)
        emit_json(args, {
            "ok": report.ok,
            "failures": [[check, str(element)] for check, element in report.failures],
            "components": report.components,
            "faces": report.faces,
        })
        return 0 if report.ok else 1
    if args.action == "expand":
        emit_diagram(args, diagram.expand_annotations(d))
    elif args.action == "mirror":
        emit_diagram(args, diagram.mirror(d))
    elif args.action == "canonical":
        emit_diagram(args, diagram.canonical(d))
    elif args.action == "invariants":
        e = diagram.expand_annotations(d)
        emit_json(args, {
            "components": len(e.components()),
            "crossings": len(e.crossings),
            "writhe": diagram.writhe(e),
            "linking_matrix": diagram.linking_matrix(e).tolist(),
        })
    return 0


# operators

def _signs(text):
    out = []
    for s in text.split(","):
        s = s.strip()
        if s not in ("+", "-", "+1", "-1"):
            raise CassonError("signs are + or -, got {}".format(s))
        out.append(1 if s.startswith("+") else -1)
    return out


def cmd_op(args, log):
    if args.action == "pretzel":
        emit_diagram(args, operators.make_pretzel_fixture())
        return 0
    if args.input is None:
        raise CassonError("op {} needs --in".format(args.action))
    d = read_diagram(args.input)
    if args.framing is not None:
        d = d.with_framing(args.comp, args.framing)
    if args.action == "double":
        out = operators.whitehead_double(d, args.comp, _signs(args.sign)[0], args.twists)
    elif args.action == "ramify":
        out = operators.ramified_double(d, args.comp, _signs(args.signs))
    elif args.action == "cable":
        out = operators.cable(d, args.comp, args.k)
    else:
        out = operators.insert_clasp_pattern(d, args.site)
    emit_diagram(args, out)
    return 0


# movie

def _driving_tree(args):
    if args.tree is not None:
        return read_json(args.tree, tree.loads)
    return tree.make_ch_mn(args.m, args.n, max(args.depth - 1, 0))


def cmd_movie(args, log):
    if args.action in ("plane", "c1", "annulus"):
        t = _driving_tree(args)
        gen = {"plane": movie.generate_plane_movie, "c1": movie.generate_c1_movie,
               "annulus": movie.generate_annulus_movie}[args.action]
        m = gen(t, args.depth)
    elif args.action == "sum":
        m = movie.end_sum([read_json(p, movie.loads) for p in args.inputs], args.placement)
    elif args.action == "cyclic":
        m = movie.cyclic_symmetrize(read_json(args.inputs[0], movie.loads), args.k)
    elif args.action == "flip":
        m = movie.flip_ribbon_move(read_json(args.inputs[0], movie.loads), args.copy)
    else:
        m = read_json(args.inputs[0], movie.loads)
        stats = movie.surface_stats(m)
        log.write(movie.stats_table(stats))
        emit_json(args, {
            "connected": stats.connected,
            "stages": [{
                "r": s.r, "births": s.births, "saddles": s.saddles, "deaths": s.deaths, "components": s.components,
                "surfaces": [list(c) for c in s.surfaces],
            } for s in stats.stages],
        })
        return 0
    emit(args, m.dumps())
    return 0


# invariants

def cmd_invariants(args, log):
    d = diagram.expand_annotations(read_diagram(args.input))
    if args.action == "h1":
        homology = invariants.h1(d)
        emit_json(args, {"h1": {"free_rank": homology.free_rank, "torsion": list(homology.torsion)}})
    elif args.action == "alexander":
        emit_json(args, {"alexander": str(invariants.alexander_polynomial(d))})
    else:
        emit_json(args, invariants.certificate_report(d, args.budget))
    return 0


def cmd_render(args, log):
    m = read_json(args.input, movie.loads)
    last = args.last if args.last is not None else m.depth
    paths = render_svg(m, RenderSpec(args.first, last, args.out or ".", args.scale, args.thick_width))
    for p in paths:
        log.write("wrote {}".format(p))
    return 0


# verification suites

def _check(condition, message):
    if not condition:
        raise VerificationFailed(message)


def suite_plane_stats(args, log):
    m = movie.generate_plane_movie(tree.make_ch_plus(args.depth), args.depth)
    stats = movie.surface_stats(m, check_until=min(args.depth, 2))
    log.write(movie.stats_table(stats))
    for s in stats.stages:
        n = s.r - 1
        births = 6 + sum(2 ** (k + 2) for k in range(1, n + 1))
        saddles = 1 + sum(2 ** (k + 1) for k in range(1, n + 1))
        _check((s.births, s.saddles, s.components) == (births, saddles, 1 + 2 ** (n + 2)),
               "plane stage {}: got {} {} {}".format(s.r, s.births, s.saddles, s.components))
        _check(sum(c.chi for c in s.surfaces) == 2 ** (n + 2) + 1, "plane stage {}: chi".format(s.r))


def suite_c1_stats(args, log):
    m = movie.generate_c1_movie(tree.make_ch_plus(args.depth), args.depth)
    stats = movie.surface_stats(m, check_until=min(args.depth, 3))
    log.write(movie.stats_table(stats))
    for s in stats.stages:
        expected = (2 ** s.r, 2 ** (s.r - 1) - 1, 2 ** (s.r - 1) + 1)
        _check((s.births, s.saddles, s.components) == expected, "c1 stage {}: got {}".format(s.r, s[1:5]))


def suite_alpha(args, log):
    for n in range(9):
        for mult in (1, 4):
            t = alpha.alpha_tangle(n, mult)
            _check(alpha.boundary_strands(t) == mult * 2 ** n, "alpha_{} x{}: strands".format(n, mult))
            _check(alpha.count_twist_boxes(t) == 2 * n + 1, "alpha_{} x{}: boxes".format(n, mult))


def suite_genus(args, log):
    depth = min(args.depth, 4)
    for name in ("plane", "annulus"):
        gen = movie.generate_plane_movie if name == "plane" else movie.generate_annulus_movie
        for t in (tree.make_ch_plus(depth), tree.make_ch_mn(2, 1, depth)):
            stats = movie.surface_stats(gen(t, depth), check_until=0)
            _check(all(c.genus == 0 for s in stats.stages for c in s.surfaces), "{}: genus".format(name))
            _check(stats.stages[-1].deaths == 0, "{}: deaths".format(name))


def suite_pd_validity(args, log):
    depth = min(args.depth, 3)
    for name in ("trefoil", "figure_eight", "hopf", "three_meridians", "meridian_double"):
        _check(diagram.validate(operators.load_fixture(name)).ok, "fixture {}".format(name))
    _check(diagram.validate(operators.pattern_d().tangle).ok, "fixture pattern_d")
    for gen in (movie.generate_c1_movie, movie.generate_annulus_movie, movie.generate_plane_movie):
        m = gen(tree.make_ch_plus(depth), depth)
        for r, d in enumerate(m.stages, 1):
            report = diagram.validate(d)
            _check(report.ok, "{} stage {}: {}".format(m.kind, r, report.failures[:1]))


def suite_h1(args, log):
    depth = min(args.depth, 2)
    for t in (tree.make_ch_plus(depth), tree.make_ch_mn(1, 1, depth)):
        m = movie.generate_c1_movie(t, depth)
        for r, d in enumerate(m.stages, 1):
            e = diagram.expand_annotations(d)
            homology = invariants.h1(e)
            _check(homology == invariants.H1(len(e.components()), []), "stage {}: H1 {}".format(r, homology))


def suite_unknot(args, log):
    for n in range(3):
        v = invariants.unknot_certificate(alpha.alpha_closure(n), args.budget)
        log.write("alpha_{} closure: {} ({})".format(n, v.kind, v.reason))
        _check(v.kind == invariants.CERTIFIED, "alpha_{} closure: {}".format(n, v.kind))
    trefoil = operators.load_fixture("trefoil")
    _check(invariants.unknot_certificate(trefoil, args.budget).kind == invariants.OBSTRUCTED, "trefoil")
    unknot = diagram.LinkDiagram(loops=[1], framings={1: 0})
    twisted = operators.whitehead_double(unknot, 0, 1, -2)
    _check(invariants.unknot_certificate(twisted, args.budget).kind == invariants.OBSTRUCTED, "twisted double")
    for name in ("trefoil", "figure_eight"):
        k = operators.load_fixture(name)
        k = k.with_framing(0, 0)
        _check(invariants.alexander_polynomial(operators.whitehead_double(k, 0)).is_one(), "double of {}".format(name))
    _check(invariants.alexander_polynomial(operators.whitehead_double(unknot, 0)).is_one(), "double of unknot")


def suite_tree(args, log):
    for m in range(4):
        for n in range(4):
            if (m, n) == (0, 0):
                continue
            t = tree.make_ch_mn(m, n, 2)
            _check(tree.first_stage_kinkiness(t) == (m, n), "kappa CH_{},{}".format(m, n))
            _check(tree.genus_bound(t) == max(m, n), "genus CH_{},{}".format(m, n))
            if m >= 1 and n >= 1:
                _check(tree.refines(t, tree.make_ch_mn(m, 0, 2)), "CH_{},{} refines CH_{},0".format(m, n, m))
    trees = tree.enumerate_trees(4)
    order = np.array([[tree.refines(a, b) for b in trees] for a in trees])
    _check(order.diagonal().all(), "reflexive")
    _check(not (order & order.T & ~np.eye(len(trees), dtype=bool)).any(), "antisymmetric")
    _check(not ((order.astype(int) @ order.astype(int) > 0) & ~order).any(), "transitive")
    for i, j in itertools.combinations_with_replacement(range(len(trees)), 2):
        c = tree.common_refinement(trees[i], trees[j])
        _check(tree.refines(c, trees[i]) and tree.refines(c, trees[j]),
               "common refinement of {} and {}".format(trees[i], trees[j]))
    ruled = [tree.make_ch_mn(m, n, d) for m, n in ((1, 0), (0, 1), (1, 1), (2, 1)) for d in (0, 1)]
    for a, b in itertools.product(ruled, repeat=2):
        c = tree.common_refinement(a, b)
        depth = max(a.depth(), b.depth()) + 2
        _check(tree.refines(c, a, depth) and tree.refines(c, b, depth), "common refinement of {} and {}".format(a, b))


def suite_end_sum(args, log):
    ms = [movie.generate_plane_movie(t, 1) for t in
          (tree.make_ch_plus(1), tree.make_ch_mn(2, 0, 1), tree.make_ch_mn(1, 1, 1))]
    texts = {movie.end_sum(list(p)).dumps() for p in itertools.permutations(ms)}
    _check(len(texts) == 1, "end sum depends on the order")


def suite_determinism(args, log):
    depth = min(args.depth, 3)
    a = movie.generate_plane_movie(tree.make_ch_plus(depth), depth).dumps()
    b = movie.generate_plane_movie(tree.make_ch_plus(depth), depth).dumps()
    _check(a == b, "plane movie output differs between runs")
    _check(movie.loads(a).dumps() == a, "movie JSON round trip")
    rng = np.random.RandomState(0)
    fixtures = [operators.load_fixture(name) for name in ("trefoil", "figure_eight", "hopf", "three_meridians")]
    for _ in range(100):
        n = rng.randint(0, 6)
        t = tree.SignedTree(0, [(int(rng.randint(0, c)), c, int(rng.choice([1, -1]))) for c in range(1, n + 1)])
        _check(tree.loads(t.dumps()) == t, "tree JSON round trip")
        d = fixtures[rng.randint(len(fixtures))]
        if rng.randint(2):
            d = diagram.mirror(d)
        if rng.randint(2):
            d = operators.connect_sum(d, 0, fixtures[rng.randint(len(fixtures))], 0)
        _check(diagram.loads(d.dumps()) == d, "diagram JSON round trip")


SUITE_FUNCTIONS = {
    "plane-stats": suite_plane_stats, "c1-stats": suite_c1_stats, "alpha": suite_alpha, "genus": suite_genus,
    "pd-validity": suite_pd_validity, "h1": suite_h1, "unknot": suite_unknot, "tree": suite_tree,
    "end-sum": suite_end_sum, "determinism": suite_determinism,
}


def cmd_verify(args, log):
    names = SUITES if args.suite == "all" else [args.suite]
    time_logging.clear()
    failed = 0
    for name in names:
        t0 = time_logging.start()
        try:
            SUITE_FUNCTIONS[name](args, log)
        except VerificationFailed as e:
            failed += 1
            log.write("FAIL {}: {}".format(name, e))
        else:
            log.write("ok   {}".format(name))
        time_logging.end(name, t0)
    if args.timing:
        log.write(time_logging.text_statistics())
    return 1 if failed else 0


# parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None,
                        help="Write the result to this path instead of stdout (default: %(default)s)")
    common.add_argument("--format", choices=["json", "pd", "svg"], default="json",
                        help="Output format for diagrams (default: %(default)s)")
    common.add_argument("--log", default=None,
                        help="Also append diagnostics to this file (default: %(default)s)")

    parser = argparse.ArgumentParser(prog="casson", description="Casson handle trees, diagrams and level movies")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("tree", parents=[common], help="signed trees")
    p.add_argument("action", choices=["new", "refines", "refine", "kinkiness"])
    p.add_argument("inputs", nargs="*", help="tree JSON files")
    p.add_argument("--m", type=int, default=1, help="positive root edges (default: %(default)s)")
    p.add_argument("--n", type=int, default=0, help="negative root edges (default: %(default)s)")
    p.add_argument("--depth", type=int, default=None,
                   help="Tree depth below each root edge, or comparison depth (default: %(default)s)")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("diagram", parents=[common], help="planar diagrams")
    p.add_argument("action", choices=["validate", "expand", "invariants", "mirror", "canonical"])
    p.add_argument("--in", dest="input", required=True, help="PD text or diagram JSON")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("op", parents=[common], help="satellite operators")
    p.add_argument("action", choices=["double", "ramify", "cable", "clasp", "pretzel"])
    p.add_argument("--in", dest="input", default=None, help="PD text or diagram JSON")
    p.add_argument("--comp", type=int, default=0, help="Component index (default: %(default)s)")
    p.add_argument("--sign", default="+", help="Clasp sign of a double (default: %(default)s)")
    p.add_argument("--signs", default="+", help="Comma separated clasp signs of a ramified double (default: %(default)s)")
    p.add_argument("--twists", type=int, default=0, help="Extra full twists of a double (default: %(default)s)")
    p.add_argument("--k", type=int, default=2, help="Number of cable strands (default: %(default)s)")
    p.add_argument("--site", type=int, default=alpha.ALPHA_SITE, help="Bunch id of the clasp site (default: %(default)s)")
    p.add_argument("--framing", type=int, default=None,
                   help="Set the framing of --comp before operating (default: %(default)s)")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("movie", parents=[common], help="level diagrams")
    p.add_argument("action", choices=["plane", "c1", "annulus", "sum", "cyclic", "flip", "stats"])
    p.add_argument("inputs", nargs="*", help="movie JSON files (sum, cyclic, flip, stats)")
    p.add_argument("--tree", default=None, help="Driving tree JSON (default: CH_{m,n})")
    p.add_argument("--m", type=int, default=1, help="positive root edges (default: %(default)s)")
    p.add_argument("--n", type=int, default=0, help="negative root edges (default: %(default)s)")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="Number of stages (default: %(default)s)")
    p.add_argument("--placement", choices=list(movie.PLACEMENTS), default="linear",
                   help="Ray layout of an end sum (default: %(default)s)")
    p.add_argument("--k", type=int, default=3, help="Copies in a cyclic sum (default: %(default)s)")
    p.add_argument("--copy", type=int, default=0, help="Copy whose ribbon move is flipped (default: %(default)s)")
    p.set_defaults(func=cmd_movie)

    p = sub.add_parser("invariants", parents=[common], help="group and polynomial certificates")
    p.add_argument("action", choices=["h1", "alexander", "unknot-cert"])
    p.add_argument("--in", dest="input", required=True, help="PD text or diagram JSON")
    p.add_argument("--budget", type=int, default=invariants.DEFAULT_BUDGET,
                   help="Tietze search node budget (default: %(default)s)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("render", parents=[common], help="SVG pictures of movie stages")
    p.add_argument("--in", dest="input", required=True, help="movie JSON")
    p.add_argument("--first", type=int, default=1, help="First stage (default: %(default)s)")
    p.add_argument("--last", type=int, default=None, help="Last stage (default: the last one)")
    p.add_argument("--scale", type=float, default=1.0, help="Drawing scale (default: %(default)s)")
    p.add_argument("--thick-width", type=float, default=3.0, help="Stroke width of bunches (default: %(default)s)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all", help="Suite to run (default: %(default)s)")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="Movie depth (default: %(default)s)")
    p.add_argument("--budget", type=int, default=invariants.DEFAULT_BUDGET,
                   help="Tietze search node budget (default: %(default)s)")
    p.add_argument("--timing", action="store_true", default=False,
                   help="Print a timing table to stderr (default: %(default)s)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if getattr(args, "command", None) == "tree" and args.action == "new" and args.depth is None:
        args.depth = DEFAULT_DEPTH
    log = Logger(args.log)
    try:
        return args.func(args, log)
    except (CassonError, OSError) as e:
        log.write("error: {}".format(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
