# pylint: disable=C,R
'''
Level diagrams (movies) of surfaces in 4-space

A movie is a list of stage diagrams (radius r = 1, 2, ...) and a ledger of
events. Pieces are integers; a `Birth` creates a disk piece with one circle,
a `Boundary` an initial boundary circle, a `Saddle` bands two circles.
Replaying the ledger with union-find gives per surface component
chi = births - saddles + deaths, b = live circles + boundaries and
g = (2 - chi - b) / 2.
'''
import json
from collections import namedtuple

from casson import alpha
from casson.diagram import LinkDiagram, expand_annotations, from_json as diagram_from_json, mirror
from casson.errors import CassonError, StageError, TreeError
from casson.operators import connect_sum, insert_clasp_pattern, pattern_d
from casson.tree import SignedTree, first_stage_kinkiness, from_json as tree_from_json, genus_bound, is_exact_kinkiness

C1 = "c1-immersed"
ANNULUS = "annulus"
PLANE = "plane"
ASSEMBLED = "assembled"
KINDS = (C1, ANNULUS, PLANE, ASSEMBLED)

DEFAULT_CHECK_UNTIL = 3

Birth = namedtuple("Birth", "piece stage")
Boundary = namedtuple("Boundary", "piece stage")
Saddle = namedtuple("Saddle", "pieces stage twists diagonal")
Saddle.__new__.__defaults__ = (0, None)
Death = namedtuple("Death", "piece stage")
DoublePointPair = namedtuple("DoublePointPair", "pieces sign stage")

EVENT_TYPES = {cls.__name__: cls for cls in (Birth, Boundary, Saddle, Death, DoublePointPair)}
_RANK = {"Birth": 0, "Boundary": 0, "DoublePointPair": 1, "Saddle": 2, "Death": 3}

ComponentStats = namedtuple("ComponentStats", "chi boundary genus")
StageStats = namedtuple("StageStats", "r births saddles deaths components surfaces")
SurfaceStats = namedtuple("SurfaceStats", "stages connected")


def _event_json(e):
    obj = {"type": type(e).__name__}
    for k, v in e._asdict().items():
        obj[k] = list(v) if isinstance(v, tuple) else v
    return obj


def _event_from_json(obj):
    cls = EVENT_TYPES[obj["type"]]
    fields = {k: (tuple(v) if isinstance(v, list) else v) for k, v in obj.items() if k != "type"}
    return cls(**fields)


def _sorted_events(events):
    return sorted(events, key=lambda e: (e.stage, _RANK[type(e).__name__]))


class Movie:
    '''
    :param kind: one of c1-immersed, annulus, plane, assembled
    :param stages: diagrams at radius 1, 2, ...
    :param events: ledger, ordered by stage
    :param tree: driving SignedTree (None for assembled movies)
    :param metadata: dict, `main` is the piece id of the main surface
    '''

    def __init__(self, kind, stages, events, tree=None, metadata=None):
        assert kind in KINDS
        self.kind = kind
        self.stages = tuple(stages)
        self.events = tuple(events)
        self.tree = tree
        self.metadata = dict(metadata or {})

    def replace(self, **kwargs):
        fields = dict(kind=self.kind, stages=self.stages, events=self.events, tree=self.tree, metadata=self.metadata)
        fields.update(kwargs)
        return Movie(**fields)

    @property
    def depth(self):
        return len(self.stages)

    def diagram(self, r):
        return self.stages[r - 1]

    def events_at(self, r):
        return [e for e in self.events if e.stage == r]

    def pieces(self):
        out = set()
        for e in self.events:
            if hasattr(e, "piece"):
                out.add(e.piece)
            else:
                out.update(e.pieces)
        return out

    def to_json(self):
        return {
            "kind": self.kind,
            "tree": self.tree.to_json() if self.tree is not None else None,
            "stages": [
                {"r": r, "pd": d.to_json(), "meridian_null_stage": r + 1, "longitude_null_stage": r + 1}
                for r, d in enumerate(self.stages, 1)
            ],
            "events": [_event_json(e) for e in self.events],
            "metadata": self.metadata,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"

    def __eq__(self, other):
        return isinstance(other, Movie) and self.dumps() == other.dumps()

    def __hash__(self):
        return hash(self.dumps())

    def __repr__(self):
        return "<Movie {} depth={} events={}>".format(self.kind, self.depth, len(self.events))


def from_json(obj):
    stages = [diagram_from_json(s["pd"]) for s in sorted(obj["stages"], key=lambda s: s["r"])]
    tree = tree_from_json(obj["tree"]) if obj.get("tree") is not None else None
    return Movie(obj["kind"], stages, [_event_from_json(e) for e in obj["events"]], tree, obj.get("metadata"))


def loads(text):
    return from_json(json.loads(text))


# ledger replay

class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)
        return rx != ry


def surface_stats(m, check_until=DEFAULT_CHECK_UNTIL):
    '''
    Replay the ledger stage by stage

    Stage diagrams with r <= check_until are expanded and their component count
    compared with the live circle count.

    :return: SurfaceStats(stages=[StageStats], connected)
    '''
    surface = _UnionFind()
    circle = _UnionFind()
    circle_of = {}
    owner = {}
    live = set()
    born, boundaries, saddles, deaths = {}, {}, {}, {}
    totals = [0, 0, 0]
    out = []
    splits = 0

    for r in range(1, m.depth + 1):
        for e in m.events_at(r):
            name = type(e).__name__
            if name in ("Birth", "Boundary"):
                surface.add(e.piece)
                circle.add(e.piece)
                circle_of[e.piece] = e.piece
                owner[e.piece] = e.piece
                live.add(e.piece)
                if name == "Birth":
                    born[e.piece] = 1
                    totals[0] += 1
                else:
                    boundaries[e.piece] = 1
            elif name == "Saddle":
                a, b = e.pieces
                if a not in circle_of or b not in circle_of:
                    raise StageError("saddle on a piece that was never born", r)
                ca, cb = circle.find(circle_of[a]), circle.find(circle_of[b])
                if ca != cb:
                    circle.union(ca, cb)
                    live.discard(max(ca, cb))
                else:
                    splits += 1
                    key = -splits
                    circle.add(key)
                    owner[key] = a
                    live.add(key)
                surface.union(a, b)
                saddles[a] = saddles.get(a, 0) + 1
                totals[1] += 1
            elif name == "Death":
                c = circle.find(circle_of[e.piece])
                if c not in live:
                    raise StageError("death of a circle that is not live", r)
                live.discard(c)
                deaths[e.piece] = deaths.get(e.piece, 0) + 1
                totals[2] += 1
            elif m.kind in (ANNULUS, PLANE):
                raise StageError("double points in an embedded movie", r)
            if name == "Death" and m.kind in (ANNULUS, PLANE):
                raise StageError("local maximum in an embedded movie", r)

        chi, bnd = {}, {}
        for p in owner:
            if p >= 0:
                root = surface.find(p)
                chi[root] = chi.get(root, 0) + born.get(p, 0) + deaths.get(p, 0) - saddles.get(p, 0)
                bnd[root] = bnd.get(root, 0) + boundaries.get(p, 0)
        for key in live:
            root = surface.find(owner[key])
            bnd[root] += 1
        surfaces = []
        for root in sorted(chi):
            twice = 2 - chi[root] - bnd[root]
            if twice < 0 or twice % 2:
                raise StageError("component of piece {} has chi {} and {} boundary circles".format(root, chi[root], bnd[root]), r)
            g = twice // 2
            if g != 0 and m.kind in (ANNULUS, PLANE):
                raise StageError("component of piece {} has genus {}".format(root, g), r)
            surfaces.append(ComponentStats(chi[root], bnd[root], g))

        if r <= check_until:
            n = len(expand_annotations(m.diagram(r)).components())
            if n != len(live):
                raise StageError("stage diagram has {} components, the ledger {}".format(n, len(live)), r)
        out.append(StageStats(r, totals[0], totals[1], totals[2], len(live), tuple(surfaces)))

    connected = bool(out) and len(out[-1].surfaces) == 1
    return SurfaceStats(out, connected)


def stats_table(stats):
    lines = ["{:>3} {:>8} {:>8} {:>6} {:>10} {:>6}".format("r", "births", "saddles", "deaths", "components", "chi")]
    for s in stats.stages:
        lines.append("{:>3} {:>8} {:>8} {:>6} {:>10} {:>6}".format(
            s.r, s.births, s.saddles, s.deaths, s.components, sum(c.chi for c in s.surfaces)))
    return "\n".join(lines)


# generators

def _tree_metadata(t):
    k = first_stage_kinkiness(t)
    return {"main": 0, "kappa": [k.positive, k.negative], "genus": genus_bound(t), "kappa_exact": is_exact_kinkiness(t)}


def _c1_ledger(t, depth, boundary):
    '''
    Stage 1: the main piece and one partner per root edge.
    Stage s > 1: two partners for every child edge of each pending vertex are born,
    then every pending partner of v is banded to the main piece with -2 sigma(v) twists.

    :return: (events, list of (circles, flips, bands) per stage); bands are the
        circle groups `(size, twists, flipped)` of the stage, one per vertex
    '''
    kids = t.children(t.root)
    if not kids:
        raise TreeError("the root of a Casson handle tree needs at least one edge")
    events = [(Boundary if boundary else Birth)(0, 1)]
    layout = []
    pending = []
    nxt = 1
    flips = []
    bands = []
    for c, s in kids:
        events.append(Birth(nxt, 1))
        if not boundary:
            events.append(DoublePointPair((0, nxt), s, 1))
        if s < 0:
            flips.append(len(pending) + 1)
        pending.append((nxt, c))
        bands.append((1, -2 * t.sigma(c), s < 0))
        nxt += 1
    layout.append((len(pending), tuple(flips), bands))

    for stage in range(2, depth + 1):
        fresh = []
        bands = []
        for _, v in pending:
            for c, _ in t.children(v):
                for _ in range(2):
                    events.append(Birth(nxt, stage))
                    fresh.append((nxt, c))
                    nxt += 1
                bands.append((2, -2 * t.sigma(c), False))
        for piece, v in pending:
            events.append(Saddle((0, piece), stage, -2 * t.sigma(v)))
        pending = fresh
        layout.append((len(pending), (), bands))
    return events, layout


def _stage(n, mult, circles, sigma, flips, bands=None):
    if circles == 0:
        return LinkDiagram(inserts=[(alpha.alpha_tangle(n, mult, sigma), 1, 1)], bunches=[(1, 1, mult * 2 ** n)])
    return alpha.stage_diagram(n, mult, circles, sigma, flips, bands)


def _ramified(t, depth):
    '''
    True when some vertex below the root up to `depth` has sigma other than +1, so the
    completion circles cannot share one bunch
    '''
    levels = t.levels()
    return any(t.sigma(v) != 1 for v, l in levels.items() if 1 <= l <= depth)


def _generate(t, depth, kind):
    if depth < 1:
        raise CassonError("a movie needs depth >= 1, got {}".format(depth))
    assert isinstance(t, SignedTree)
    t = t.canonical()
    # one level past the last stage, so the circles of the last stage know their sigma
    expanded = t.expand(depth + 1)
    events, layout = _c1_ledger(expanded, depth, boundary=(kind == ANNULUS))
    sigma = expanded.sigma(expanded.root)
    ramified = _ramified(expanded, depth)
    stages = [_stage(r - 1, 1, circles, sigma, flips, bands if ramified else None)
              for r, (circles, flips, bands) in enumerate(layout, 1)]
    return Movie(kind, stages, _sorted_events(events), t, _tree_metadata(t))


def generate_c1_movie(t, depth):
    '''
    Level diagram of the immersed core disk and its iterated doubles
    '''
    return _generate(t, depth, C1)


def generate_annulus_movie(t, depth):
    '''
    The c1 movie with the alpha_0 disk deleted: the main circle is a boundary circle
    '''
    return _generate(t, depth, ANNULUS)


def generate_plane_movie(t, depth):
    '''
    Quadruple the c1 movie and splice pattern D into the alpha_0 bunch

    depth 0 gives the radius-1 diagram only, like depth 1.
    '''
    return insert_clasp_pattern_movie(cable_movie(generate_c1_movie(t, max(depth, 1)), 4), alpha.ALPHA_SITE)


# transforms

def _cable_diagram(d, k):
    bunches = []
    for b in d.bunches:
        flips = tuple(k * (j - 1) + i for j in b.flips for i in range(1, k + 1))
        bunches.append((b.id, b.arc, b.size * k, flips))
    inserts = [(_cable_diagram(i.tangle, k), i.below, i.above) for i in d.inserts]
    return d.replace(bunches=bunches, inserts=inserts)


def cable_movie(m, k):
    '''
    Replace every strand of every stage by k parallels; piece p becomes pieces k p .. k p + k - 1
    '''
    if k < 1:
        raise CassonError("cable needs k >= 1, got {}".format(k))
    events = []
    for e in m.events:
        for i in range(k):
            if hasattr(e, "piece"):
                events.append(e._replace(piece=e.piece * k + i))
            else:
                events.append(e._replace(pieces=tuple(p * k + i for p in e.pieces)))
    metadata = dict(m.metadata, main=m.metadata.get("main", 0) * k, cabled=m.metadata.get("cabled", 1) * k)
    return m.replace(stages=[_cable_diagram(d, k) for d in m.stages], events=_sorted_events(events), metadata=metadata)


def insert_clasp_pattern_movie(m, site=alpha.ALPHA_SITE, sigma=None):
    '''
    Splice pattern D into every stage and replace the copies of the main disk by
    the two disks and the band of pattern D
    '''
    pattern = pattern_d()
    k = m.metadata.get("cabled", 1)
    if k != pattern.multiplicity:
        raise CassonError("pattern D needs a movie cabled {} times, got {}".format(pattern.multiplicity, k))
    if m.kind != C1:
        raise CassonError("pattern D is spliced into c1 movies, got {}".format(m.kind))
    main = m.metadata.get("main", 0)
    copies = set(range(main, main + k))
    remap = lambda p: main if p in copies else p
    events = [Birth(main, 1), Birth(main + 1, 1), Saddle((main, main + 1), 1, 0, 0)]
    for e in m.events:
        if isinstance(e, DoublePointPair):
            continue
        if isinstance(e, Birth) and e.piece in copies:
            continue
        if hasattr(e, "piece"):
            events.append(e._replace(piece=remap(e.piece)))
        else:
            events.append(e._replace(pieces=tuple(remap(p) for p in e.pieces)))
    stages = [insert_clasp_pattern(d, site, sigma) for d in m.stages]
    metadata = {k_: v for k_, v in m.metadata.items() if k_ != "cabled"}
    return m.replace(kind=PLANE, stages=stages, events=_sorted_events(events), metadata=metadata)


def mirror_movie(m):
    '''
    Mirror every stage; double point signs and band twists change sign
    '''
    events = []
    for e in m.events:
        if isinstance(e, DoublePointPair):
            e = e._replace(sign=-e.sign)
        elif isinstance(e, Saddle):
            e = e._replace(twists=-e.twists)
        events.append(e)
    metadata = dict(m.metadata)
    if "kappa" in metadata:
        metadata["kappa"] = metadata["kappa"][::-1]
    tree = m.tree.mirror() if m.tree is not None else None
    return m.replace(stages=[mirror(d) for d in m.stages], events=events, tree=tree, metadata=metadata)


def _main_component(d):
    return d.component_index().get(1, 0)


def _band(parts):
    '''
    Expand each diagram and band the main components (the one through label 1) together
    '''
    acc = expand_annotations(parts[0])
    for d in parts[1:]:
        d = expand_annotations(d)
        acc = connect_sum(acc, _main_component(acc), d, _main_component(d))
    return acc


def _shift_events(m, piece_shift, stage_shift):
    out = []
    for e in m.events:
        e = e._replace(stage=e.stage + stage_shift)
        if hasattr(e, "piece"):
            out.append(e._replace(piece=e.piece + piece_shift))
        else:
            out.append(e._replace(pieces=tuple(p + piece_shift for p in e.pieces)))
    return out


def _free_word_lengths(count):
    '''
    Word lengths of the first `count` reduced words in the free group on a, b (shortlex order)
    '''
    lengths = [0]
    words = [""]
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    while len(lengths) < count:
        nxt = []
        for w in words:
            for x in "aAbB":
                if w and inverse[x] == w[-1]:
                    continue
                nxt.append(w + x)
        lengths += [len(w) for w in nxt]
        words = nxt
    return lengths[:count]


PLACEMENTS = ("linear", "polar", "planar")


def stagger(count, placement):
    '''
    Radius offset of each summand: i on a line, 0 around a circle, word length in the plane
    '''
    if placement == "linear":
        return list(range(count))
    if placement == "polar":
        return [0] * count
    if placement == "planar":
        return _free_word_lengths(count)
    raise CassonError("unknown placement {}".format(placement))


def end_sum(movies, placement="linear"):
    '''
    End sum of plane or annulus movies

    Summands are sorted by their serialization, summand i starts |m_i| radii
    late and its main surface is banded to that of summand 0 at its first stage.
    A summand shorter than the assembly keeps its last stage.
    '''
    movies = list(movies)
    if not movies:
        raise CassonError("end_sum needs at least one movie")
    for m in movies:
        if m.kind not in (PLANE, ANNULUS):
            raise CassonError("end sums take plane or annulus movies, got {}".format(m.kind))
    if len(movies) == 1:
        return movies[0]
    movies.sort(key=lambda m: m.dumps())
    offsets = stagger(len(movies), placement)
    total = max(o + m.depth for o, m in zip(offsets, movies))

    events = []
    bases = []
    base = 0
    for o, m in zip(offsets, movies):
        bases.append(base)
        events += _shift_events(m, base, o)
        base += max(m.pieces()) + 1
    main0 = movies[0].metadata.get("main", 0)
    for i in range(1, len(movies)):
        main = movies[i].metadata.get("main", 0) + bases[i]
        events.append(Saddle((main0, main), offsets[i] + 1, 0, None))

    stages = []
    for r in range(1, total + 1):
        parts = [m.diagram(min(r - o, m.depth)) for o, m in zip(offsets, movies) if r - o >= 1]
        stages.append(_band(parts))
    metadata = {"main": main0, "placement": placement, "offsets": offsets, "summands": len(movies)}
    return Movie(ASSEMBLED, stages, _sorted_events(events), None, metadata)


def cyclic_symmetrize(m, k):
    '''
    k rotated copies banded to a hub disk born at radius 1
    '''
    if k < 1:
        raise CassonError("cyclic_symmetrize needs k >= 1, got {}".format(k))
    if m.kind not in (PLANE, ANNULUS):
        raise CassonError("cyclic sums take plane or annulus movies, got {}".format(m.kind))
    width = max(m.pieces()) + 1
    hub = k * width
    main = m.metadata.get("main", 0)
    events = [Birth(hub, 1)]
    for i in range(k):
        events += _shift_events(m, i * width, 0)
        events.append(Saddle((hub, main + i * width), 1, 0, None))
    stages = [_band([d] * k) for d in m.stages]
    metadata = {"main": hub, "placement": "polar", "copies": k}
    return Movie(ASSEMBLED, stages, _sorted_events(events), m.tree, metadata)


def _toggle_ribbon(d, index):
    '''
    :return: (diagram, index left over) after toggling ribbon number `index`
    '''
    ribbons = list(d.ribbons)
    if index < len(ribbons):
        r = ribbons[index]
        ribbons[index] = r._replace(diagonal=1 - r.diagonal)
        return d.replace(ribbons=ribbons), -1
    index -= len(ribbons)
    inserts = []
    for ins in d.inserts:
        if index >= 0:
            t, index = _toggle_ribbon(ins.tangle, index)
            inserts.append((t, ins.below, ins.above))
        else:
            inserts.append(tuple(ins))
    return d.replace(inserts=inserts), index


def flip_ribbon_move(m, copy=0):
    '''
    Switch the ribbon move of pattern D in copy `copy` to the other diagonal
    '''
    stages = []
    for r, d in enumerate(m.stages, 1):
        d, left = _toggle_ribbon(d, copy)
        if left >= 0:
            raise StageError("no ribbon move number {}".format(copy), r)
        stages.append(d)
    events = list(m.events)
    ribbon_saddles = [i for i, e in enumerate(events) if isinstance(e, Saddle) and e.diagonal is not None]
    if copy >= len(ribbon_saddles):
        raise CassonError("no ribbon band number {} in the ledger".format(copy))
    i = ribbon_saddles[copy]
    events[i] = events[i]._replace(diagonal=1 - events[i].diagonal)
    return m.replace(stages=stages, events=events)


def _ch_mn_movie(m, n, depth, kind):
    from casson.tree import make_ch_plus
    if m < 0 or n < 0 or (m, n) == (0, 0):
        raise TreeError("CH_{{m,n}} needs (m, n) != (0, 0)")
    plus = _generate(make_ch_plus(depth), depth, kind)
    summands = [plus] * m + [mirror_movie(plus)] * n
    width = max(plus.pieces()) + 1
    first = Boundary if kind == ANNULUS else Birth
    events = [first(0, 1)]
    for i, s in enumerate(summands):
        shift = i * width
        for e in _shift_events(s, shift, 0):
            if isinstance(e, (Birth, Boundary)) and e.piece == shift:
                continue
            if hasattr(e, "piece"):
                events.append(e._replace(piece=0 if e.piece == shift else e.piece))
            else:
                events.append(e._replace(pieces=tuple(0 if p == shift else p for p in e.pieces)))
    stages = [_band([s.diagram(r) for s in summands]) for r in range(1, depth + 1)]
    metadata = {"main": 0, "kappa": [m, n], "genus": max(m, n), "kappa_exact": True, "summands": m + n}
    return Movie(kind, stages, _sorted_events(events), None, metadata)


def ch_mn_c1_movie(m, n, depth):
    '''
    c1 movie of CH_{m,n} assembled from m copies of the CH+ movie and n mirrored copies

    The copies share one main disk; their stage diagrams are banded at alpha_0.
    '''
    return _ch_mn_movie(m, n, depth, C1)


def ch_mn_annulus_movie(m, n, depth):
    '''
    Annulus realizing kinkiness (m, n) and genus max(m, n): the CH_{m,n} sum with the alpha_0 disk deleted

    The copies share the boundary circle at radius 1.
    '''
    return _ch_mn_movie(m, n, depth, ANNULUS)


def test_ch_plus_c1_counts():
    from casson.tree import make_ch_plus
    stats = surface_stats(generate_c1_movie(make_ch_plus(3), 3), check_until=2)
    assert [s.births for s in stats.stages] == [2, 4, 8]
    assert [s.saddles for s in stats.stages] == [0, 1, 3]
    assert [s.components for s in stats.stages] == [2, 3, 5]


def test_disk_stats():
    m = Movie(PLANE, [LinkDiagram(loops=[1])], [Birth(0, 1)])
    s = surface_stats(m).stages[0]
    assert s.surfaces == (ComponentStats(1, 1, 0),)


def main():
    test_ch_plus_c1_counts()
    test_disk_stats()


if __name__ == "__main__":
    main()
