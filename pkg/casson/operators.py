# pylint: disable=C,R
'''
Satellite operators on diagrams

Doubles and cables are built on the planar graph: the companion is cabled
along the blackboard framing, full twists restore the 0-framing, and for a
double the second copy is reversed and the two copies are clasped.
'''
import os
from collections import namedtuple

from casson import planar
from casson.diagram import Insert, expand_annotations, from_graph, linking_matrix, parse_pd, self_writhe, validate
from casson.errors import CassonError, FramingError

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")

Pattern = namedtuple("Pattern", "tangle multiplicity")


def fixtures_dir():
    return os.environ.get("CASSON_FIXTURES", FIXTURES)


def load_fixture(name):
    '''
    Parse `<name>.pd` from the fixture directory ($CASSON_FIXTURES overrides the packaged one)
    '''
    path = os.path.join(fixtures_dir(), name + ".pd")
    if not os.path.exists(path):
        raise CassonError("no fixture named {} in {}".format(name, fixtures_dir()))
    with open(path) as f:
        return parse_pd(f.read())


def pattern_d():
    '''
    The ribbon disk pattern spliced into 4-strand bunches
    '''
    return Pattern(load_fixture("pattern_d"), 4)


def _resolved_writhe(d, comp):
    '''
    Self-writhe of `comp`; refuses blackboard framing on a writhed component
    '''
    if not 0 <= comp < len(d.components()):
        raise CassonError("no component {}".format(comp))
    w = self_writhe(d, comp)
    if d.framing(comp) is None and w != 0:
        raise FramingError(
            "component {} has blackboard framing and self-writhe {}; give it a framing first".format(comp, w))
    return w


def _mark_zero(d, labels):
    index = d.component_index()
    for l in labels:
        d = d.with_framing(index[l], 0)
    return d


def _clasp(g, e1, e2, sign):
    '''
    Splice a clasp into two adjacent antiparallel labels

    `e1` runs upward on the left and `e2` downward on the right. The left
    strand hooks over to the right and the right strand hooks back to the left.

    :return: label of the upper part of the left strand
    '''
    occ = g.occurrences()
    nxt = g.max_label() + 1
    a, b = nxt, nxt + 1
    if not occ.get(e1):
        up, down = e1, e2
        g.loops.discard(e1)
        g.loops.discard(e2)
    else:
        up, down = nxt + 2, nxt + 3
        h1, h2 = g.heads[e1], g.heads[e2]
        g.set_label(h1, up)
        g.heads[up] = h1
        g.set_label(h2, down)
        g.heads[down] = h2
    if sign > 0:
        planar.add_crossing(g, (b, a, up, e1, 1))
        planar.add_crossing(g, (a, b, down, e2, 1))
    else:
        planar.add_crossing(g, (e1, b, a, up, -1))
        planar.add_crossing(g, (e2, a, b, down, -1))
    return up


def whitehead_double(d, comp, sign=1, twists=0):
    '''
    Replace component `comp` by its Whitehead double

    The double is taken with respect to the 0-framing of the companion, plus
    `twists` full twists; the new component is marked 0-framed.

    :param sign: sign of the two clasp crossings
    '''
    assert sign in (1, -1)
    d = expand_annotations(d)
    if d.is_tangle:
        raise CassonError("doubling needs a closed diagram")
    w = _resolved_writhe(d, comp)
    labels = d.components()[comp]
    e = min(labels)

    g, copies = planar.cable(d.graph(), {l: 2 for l in labels})
    og, _, comps = planar.orient(g)
    e1, e2 = copies[e]
    second = next(c for c in comps if e2 in c)
    og, _, _ = planar.orient(planar.reverse(og, second))
    top = _clasp(og, e1, e2, sign)
    og = planar.twist(og, [(top, True), (e2, False)], -w + twists)
    og, _, _ = planar.orient(og)

    out = from_graph(og, framings=d.framings, dots=d.dots, ribbons=d.ribbons)
    return _mark_zero(out, [e])


def _cable(d, comp, k):
    if k < 1:
        raise CassonError("cable needs k >= 1, got {}".format(k))
    d = expand_annotations(d)
    w = _resolved_writhe(d, comp)
    labels = d.components()[comp]
    e = min(labels)
    if k == 1:
        return d, [e]
    g, copies = planar.cable(d.graph(), {l: k for l in labels})
    og = planar.twist(g, [(c, True) for c in copies[e]], -w)
    og, _, _ = planar.orient(og)
    out = from_graph(og, framings=d.framings, dots=d.dots, ribbons=d.ribbons)
    return _mark_zero(out, copies[e]), copies[e]


def cable(d, comp, k):
    '''
    Replace component `comp` by `k` parallel copies along its 0-framing

    Copy 1 keeps the original labels; every copy is marked 0-framed.
    '''
    return _cable(d, comp, k)[0]


def ramified_double(d, comp, signs):
    '''
    Double each of `len(signs)` parallel 0-framed copies of `comp`, copy i with clasp sign signs[i]
    '''
    signs = list(signs)
    if not signs:
        raise CassonError("ramified_double needs at least one sign")
    if len(signs) == 1:
        return whitehead_double(d, comp, signs[0])
    out, marks = _cable(d, comp, len(signs))
    for mark, s in zip(marks, signs):
        out = whitehead_double(out, out.component_index()[mark], s)
    return out


def shifted(d, shift, bunch_shift=0):
    '''
    Add `shift` to every label (nested tangles keep their own labels)
    '''
    s = lambda l: l + shift
    return d.replace(
        crossings=[tuple(s(l) for l in x[:4]) + (x.sign,) for x in d.crossings],
        loops=[s(l) for l in d.loops],
        framings={s(l): v for l, v in d.framings.items()},
        dots={s(l) for l in d.dots},
        bunches=[(b.id + bunch_shift, s(b.arc), b.size, b.flips) for b in d.bunches],
        boxes=[(tuple((s(l), u) for l, u in box.arcs), box.twists) for box in d.boxes],
        inserts=[(i.tangle, s(i.below), s(i.above)) for i in d.inserts],
        ribbons=[(s(r.a), s(r.b), r.diagonal) for r in d.ribbons],
        top=[s(l) for l in d.top],
        bottom=[s(l) for l in d.bottom],
    )


def disjoint_union(d1, d2):
    '''
    Diagrams side by side; for tangles the endpoints are concatenated
    '''
    arcs = d1.arcs()
    ids = [b.id for b in d1.bunches]
    d2 = shifted(d2, max(arcs) if arcs else 0, max(ids) + 1 if ids else 0)
    return d1.replace(
        crossings=d1.crossings + d2.crossings,
        loops=d1.loops + d2.loops,
        framings={**d1.framings, **d2.framings},
        dots=d1.dots | d2.dots,
        bunches=d1.bunches + d2.bunches,
        boxes=d1.boxes + d2.boxes,
        inserts=d1.inserts + d2.inserts,
        ribbons=d1.ribbons + d2.ribbons,
        top=d1.top + d2.top,
        bottom=d1.bottom + d2.bottom,
    )


def connect_sum(d1, i, d2, j):
    '''
    Band component `i` of `d1` to component `j` of `d2` along their smallest labels

    The heads of the two labels are swapped, which keeps both orientations.
    Integer framings add up.
    '''
    d1, d2 = expand_annotations(d1), expand_annotations(d2)
    if d1.is_tangle or d2.is_tangle:
        raise CassonError("connect_sum needs closed diagrams")
    fr1, fr2 = d1.framing(i), d2.framing(j)
    shift = max(d1.arcs()) if d1.arcs() else 0
    e = min(d1.components()[i])
    f = min(d2.components()[j]) + shift
    u = disjoint_union(d1, d2)

    g = u.graph()
    occ = g.occurrences()
    if not occ.get(e):
        g.loops.discard(e)
        keep = f
    elif not occ.get(f):
        g.loops.discard(f)
        keep = e
    else:
        he, hf = g.heads[e], g.heads[f]
        g.set_label(he, f)
        g.set_label(hf, e)
        g.heads[e], g.heads[f] = hf, he
        keep = e
    g, _, _ = planar.orient(g)
    framings = {l: v for l, v in u.framings.items() if l not in (e, f)}
    out = from_graph(g, framings=framings, dots=u.dots - {e, f}, ribbons=u.ribbons)
    if fr1 is not None or fr2 is not None:
        w1 = fr1 if fr1 is not None else self_writhe(d1, i)
        w2 = fr2 if fr2 is not None else self_writhe(d2, j)
        out = out.with_framing(out.component_index()[keep], w1 + w2)
    return out


def pretzel(*ps):
    '''
    Pretzel link: columns of `ps[i]` half twists joined cyclically along the top and the bottom

    :return: (diagram, labels joining column i to i+1 on top, same on the bottom)
    '''
    if not ps or any(p == 0 for p in ps):
        raise CassonError("pretzel columns need at least one crossing each")
    g = planar.Graph()
    count = [0]
    ends = []

    def edge(o1, o2):
        count[0] += 1
        l = count[0]
        g.set_label(o1, l)
        g.set_label(o2, l)
        g.heads[l] = o2
        return l

    for p in ps:
        if p > 0:
            slot = {'SW': 0, 'SE': 1, 'NE': 2, 'NW': 3}
        else:
            slot = {'SE': 0, 'NE': 1, 'NW': 2, 'SW': 3}
        first = len(g.verts)
        n = abs(p)
        g.verts += [[None] * 4 for _ in range(n)]
        for k in range(n - 1):
            edge((first + k, slot['NW']), (first + k + 1, slot['SW']))
            edge((first + k, slot['NE']), (first + k + 1, slot['SE']))
        ends.append({
            'BL': (first, slot['SW']), 'BR': (first, slot['SE']),
            'TL': (first + n - 1, slot['NW']), 'TR': (first + n - 1, slot['NE']),
        })

    tops, bottoms = [], []
    for i, here in enumerate(ends):
        there = ends[(i + 1) % len(ends)]
        tops.append(edge(here['TR'], there['TL']))
        bottoms.append(edge(here['BR'], there['BL']))
    og, _, _ = planar.orient(g)
    return from_graph(og), tops, bottoms


def make_pretzel_fixture():
    '''
    The (-3, 3, -3, 3) pretzel link with its two ribbon moves
    '''
    d, tops, bottoms = pretzel(-3, 3, -3, 3)
    return d.replace(ribbons=[(tops[0], bottoms[0], 0), (tops[2], bottoms[2], 0)])


def _has_bunch(d, site):
    return any(b.id == site for b in d.bunches) or any(_has_bunch(i.tangle, site) for i in d.inserts)


def _splice(d, site, pattern, sigma):
    for b in d.bunches:
        if b.id == site:
            if b.size != pattern.multiplicity:
                raise CassonError("bunch {} has {} strands, the pattern needs {}".format(site, b.size, pattern.multiplicity))
            return _splice_here(d, b, pattern, sigma)
    inserts = []
    done = False
    for ins in d.inserts:
        if not done and _has_bunch(ins.tangle, site):
            inserts.append((_splice(ins.tangle, site, pattern, sigma), ins.below, ins.above))
            done = True
        else:
            inserts.append(tuple(ins))
    return d.replace(inserts=inserts)


def _splice_here(d, bunch, pattern, sigma):
    '''
    Cut the bunch arc at its head: the old label enters the pattern box, a new one leaves it
    '''
    l = bunch.arc
    g = d.graph()
    if l not in g.heads:
        raise CassonError("bunch {} sits on a crossingless circle".format(bunch.id))
    head = g.heads[l]
    new = max(d.arcs()) + 1
    crossings = [list(x) for x in d.crossings]
    top, bottom = list(d.top), list(d.bottom)
    inserts = [list(i) for i in d.inserts]
    if planar.is_vertex(head):
        crossings[head[0]][head[1]] = new
    elif head[0] == 'top':
        top[head[1]] = new
    elif head[0] == 'bottom':
        bottom[head[1]] = new
    else:
        inserts[head[1]][1 if head[0] == 'ib' else 2] = new

    ids = [b.id for b in d.bunches]
    bunches = list(d.bunches) + [(max(ids) + 1, new, bunch.size, bunch.flips)]
    boxes = list(d.boxes)
    if sigma is not None:
        boxes = [(box.arcs, -2 * sigma) if any(a == l for a, _ in box.arcs) else tuple(box) for box in boxes]
    inserts.append(Insert(pattern.tangle, l, new))
    return d.replace(crossings=[tuple(x) for x in crossings], top=top, bottom=bottom,
                     bunches=bunches, boxes=boxes, inserts=[tuple(i) for i in inserts])


def insert_clasp_pattern(target, site=0, sigma=None):
    '''
    Splice pattern D into the 4-strand bunch `site` (nested boxes are searched too)

    Works on diagrams, tangles and movies. With `sigma` the twist box on the
    bunch is reset to -2 * sigma.
    '''
    if hasattr(target, "stages"):
        from casson.movie import insert_clasp_pattern_movie
        return insert_clasp_pattern_movie(target, site, sigma)
    if not _has_bunch(target, site):
        raise CassonError("no bunch with id {}".format(site))
    return _splice(target, site, pattern_d(), sigma)


def test_pretzel_components():
    d = make_pretzel_fixture()
    assert len(d.components()) == 2
    assert len(d.crossings) == 12
    assert validate(d).ok
    assert int(linking_matrix(d)[0, 1]) == 0


def test_double_of_unknot_is_a_knot():
    d = whitehead_double(parse_pd("LOOP 1\n"), 0)
    assert len(d.components()) == 1
    assert len(d.crossings) == 2
    assert d.framing(0) == 0
    assert validate(d).ok


def test_blackboard_trefoil_refused():
    trefoil = parse_pd("X+ 1 5 2 4\nX+ 3 1 4 6\nX+ 5 3 6 2\n")
    try:
        whitehead_double(trefoil, 0)
    except FramingError:
        pass
    else:
        raise AssertionError("blackboard framing with writhe 3 must be refused")


def main():
    test_pretzel_components()
    test_double_of_unknot_is_a_knot()
    test_blackboard_trefoil_refused()


if __name__ == "__main__":
    main()
