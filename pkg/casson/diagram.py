# pylint: disable=C,R
'''
Annotated planar link and tangle diagrams

A crossing is `(a, b, c, d, sign)` with the four arc labels counterclockwise
starting at the incoming under strand (`a -> c` is the under strand). With
sign +1 the over strand enters at `d` and leaves at `b`, with sign -1 it enters
at `b` and leaves at `d`.

Annotations let a small diagram stand for a big one:

* `Bunch(id, arc, size, flips)`: the strand through `arc` is `size` blackboard parallels,
  copies listed in `flips` run backwards
* `TwistBox(arcs, twists)`: full twists on a cross-section `((label, up), ...)` read left to right
* `Insert(tangle, below, above)`: a nested tangle box sitting on a strand
* `RibbonMove(a, b, diagonal)`: band between two arcs (bookkeeping only)
* framings (keyed by the smallest label of a component) and dotted components
'''
import json
from collections import Counter, namedtuple

import numpy as np

from casson import planar
from casson.errors import CassonError, DiagramError


Crossing = namedtuple("Crossing", "a b c d sign")
Bunch = namedtuple("Bunch", "id arc size flips")
Bunch.__new__.__defaults__ = ((),)
TwistBox = namedtuple("TwistBox", "arcs twists")
Insert = namedtuple("Insert", "tangle below above")
RibbonMove = namedtuple("RibbonMove", "a b diagonal")
RibbonMove.__new__.__defaults__ = (0,)
ValidationReport = namedtuple("ValidationReport", "ok failures components faces")


def framing_offset(value):
    '''
    Offset carried by a relative framing: 'bb' -> 0, 'bb+2' -> 2, 'bb-1' -> -1
    '''
    if value == 'bb':
        return 0
    return int(value[2:])


def relative_framing(offset):
    return 'bb' if offset == 0 else 'bb{:+d}'.format(offset)


class LinkDiagram:
    '''
    Immutable annotated diagram; every modification returns a new diagram
    '''
    is_tangle = False

    def __init__(self, crossings=(), loops=(), framings=None, dots=(), bunches=(), boxes=(), inserts=(), ribbons=(), top=(), bottom=()):
        self.crossings = tuple(Crossing(*x) for x in crossings)
        self.loops = tuple(sorted(loops))
        self.framings = dict(framings or {})
        self.dots = frozenset(dots)
        self.bunches = tuple(Bunch(*b) for b in bunches)
        self.boxes = tuple(TwistBox(tuple((l, int(u)) for l, u in b[0]), b[1]) for b in boxes)
        self.inserts = tuple(Insert(*i) for i in inserts)
        self.ribbons = tuple(RibbonMove(*r) for r in ribbons)
        self.top = tuple(top)
        self.bottom = tuple(bottom)
        self._cache = {}

    def replace(self, **kwargs):
        fields = dict(
            crossings=self.crossings, loops=self.loops, framings=self.framings, dots=self.dots,
            bunches=self.bunches, boxes=self.boxes, inserts=self.inserts, ribbons=self.ribbons,
            top=self.top, bottom=self.bottom,
        )
        fields.update(kwargs)
        if fields['top'] or fields['bottom'] or self.is_tangle:
            return Tangle(**fields)
        return LinkDiagram(**fields)

    def arcs(self):
        labels = set(self.loops) | set(self.top) | set(self.bottom)
        for x in self.crossings:
            labels.update(x[:4])
        for ins in self.inserts:
            labels.update((ins.below, ins.above))
        return sorted(labels)

    def is_annotated(self):
        return bool(self.bunches or self.boxes or self.inserts)

    def graph(self):
        '''
        Planar graph of the diagram; insert `k` appears as box `k`
        '''
        boxes = {k: [[ins.below], [ins.above]] for k, ins in enumerate(self.inserts)}
        return planar.from_crossings(self.crossings, self.top, self.bottom, boxes, self.loops)

    def components(self):
        '''
        Components (strands for tangles) as label lists in travel order, ordered by smallest label
        '''
        if 'components' not in self._cache:
            self._cache['components'] = planar.orient(self.graph())[2]
        return self._cache['components']

    def component_index(self):
        return {l: i for i, comp in enumerate(self.components()) for l in comp}

    def component_of(self, label):
        return self.components()[self.component_index()[label]]

    def bunch_size(self, comp):
        labels = set(self.components()[comp])
        for b in self.bunches:
            if b.arc in labels:
                return b.size
        return 1

    def represented_components(self):
        '''
        Number of components the annotated diagram stands for
        '''
        if self.inserts:
            return len(expand_annotations(self).components())
        return sum(self.bunch_size(i) for i in range(len(self.components())))

    def framing(self, comp):
        '''
        Framing of component `comp`: an int, or None for blackboard
        '''
        labels = self.components()[comp]
        values = [self.framings[l] for l in labels if l in self.framings]
        ints = [v for v in values if isinstance(v, int)]
        if ints:
            return ints[0]
        offset = sum(framing_offset(v) for v in values)
        if offset:
            return self_writhe(self, comp) + offset
        return None

    def with_framing(self, comp, value):
        labels = set(self.components()[comp])
        framings = {l: v for l, v in self.framings.items() if l not in labels}
        if value is not None and value != 'bb':
            framings[min(labels)] = value
        return self.replace(framings=framings)

    def with_dot(self, comp):
        return self.replace(dots=self.dots | {min(self.components()[comp])})

    # serialization

    def to_json(self):
        obj = {
            "crossings": [list(x) for x in self.crossings],
            "arcs": self.arcs(),
            "loops": list(self.loops),
            "framings": {str(l): v for l, v in sorted(self.framings.items())},
            "dots": sorted(self.dots),
            "bunches": [[b.id, b.arc, b.size, list(b.flips)] for b in self.bunches],
            "boxes": [{"arcs": [[l, u] for l, u in b.arcs], "twists": b.twists} for b in self.boxes],
            "inserts": [{"below": i.below, "above": i.above, "tangle": i.tangle.to_json()} for i in self.inserts],
            "ribbons": [list(r) for r in self.ribbons],
        }
        if self.is_tangle:
            obj["top"] = list(self.top)
            obj["bottom"] = list(self.bottom)
        return obj

    def dumps(self):
        return dumps(self.to_json())

    def to_text(self):
        '''
        Line based PD text form
        '''
        lines = []
        self._text_lines(lines, "")
        return "\n".join(lines) + "\n"

    def _text_lines(self, lines, indent):
        index = self.component_index()
        if self.is_tangle:
            lines.append(indent + "TOP " + " ".join(str(l) for l in self.top))
            lines.append(indent + "BOTTOM " + " ".join(str(l) for l in self.bottom))
        for a, b, c, d, s in self.crossings:
            lines.append(indent + "X{} {} {} {} {}".format("+" if s > 0 else "-", a, b, c, d))
        for l in self.loops:
            lines.append(indent + "LOOP {}".format(l))
        for b in self.bunches:
            line = "B id={} arc={} size={}".format(b.id, b.arc, b.size)
            if b.flips:
                line += " flips=" + ",".join(str(j) for j in b.flips)
            lines.append(indent + line)
        for box in self.boxes:
            arcs = ",".join("{}:{:+d}".format(l, u) for l, u in box.arcs)
            lines.append(indent + "T twists={} arcs={}".format(box.twists, arcs))
        for l, v in sorted(self.framings.items()):
            lines.append(indent + "F comp={} framing={}".format(index[l], v))
        for l in sorted(self.dots):
            lines.append(indent + "DOT comp={}".format(index[l]))
        for r in self.ribbons:
            lines.append(indent + "R {} {} diagonal={}".format(r.a, r.b, r.diagonal))
        for ins in self.inserts:
            lines.append(indent + "BEGIN INSERT below={} above={}".format(ins.below, ins.above))
            ins.tangle._text_lines(lines, indent + "  ")
            lines.append(indent + "END INSERT")

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(self.dumps())

    def __repr__(self):
        return "<{} crossings={} components={}>".format(type(self).__name__, len(self.crossings), len(self.components()))


class Tangle(LinkDiagram):
    '''
    Diagram in a box with endpoints on the top and bottom sides, listed left to right
    '''
    is_tangle = True

    def closure(self):
        '''
        Braid closure of the expanded tangle: top endpoint i is joined to bottom endpoint i
        '''
        t = expand_annotations(self)
        g, _, _ = planar.orient(planar.close(t.graph()))
        return from_graph(g, framings=_closed_framings(t, g), dots=t.dots, ribbons=t.ribbons)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def from_json(obj):
    fields = dict(
        crossings=[tuple(x) for x in obj.get("crossings", [])],
        loops=obj.get("loops", []),
        framings={int(l): v for l, v in obj.get("framings", {}).items()},
        dots=obj.get("dots", []),
        bunches=[(b[0], b[1], b[2], tuple(b[3]) if len(b) > 3 else ()) for b in obj.get("bunches", [])],
        boxes=[(tuple(tuple(a) for a in b["arcs"]), b["twists"]) for b in obj.get("boxes", [])],
        inserts=[(from_json(i["tangle"]), i["below"], i["above"]) for i in obj.get("inserts", [])],
        ribbons=[tuple(r) for r in obj.get("ribbons", [])],
    )
    if "top" in obj or "bottom" in obj:
        return Tangle(top=obj.get("top", []), bottom=obj.get("bottom", []), **fields)
    return LinkDiagram(**fields)


def loads(text):
    return from_json(json.loads(text))


def parse_pd(text):
    '''
    Parse the line based PD text form (see `LinkDiagram.to_text`)
    '''
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    d, rest = _parse_block(lines, 0)
    if rest != len(lines):
        raise DiagramError("unexpected line: {}".format(lines[rest]))
    return d


def _keyvals(tokens, lineno):
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise DiagramError("line {}: expected key=value, got {}".format(lineno, tok))
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def _parse_block(lines, i):
    crossings, loops, bunches, boxes, inserts, ribbons = [], [], [], [], [], []
    framings, dots = [], []
    top = bottom = None
    while i < len(lines):
        tokens = lines[i].split()
        head = tokens[0]
        try:
            if head in ("X+", "X-"):
                if len(tokens) != 5:
                    raise DiagramError("line {}: a crossing has four labels".format(i + 1))
                crossings.append(tuple(int(t) for t in tokens[1:]) + (1 if head == "X+" else -1,))
            elif head == "LOOP":
                loops.extend(int(t) for t in tokens[1:])
            elif head == "TOP":
                top = [int(t) for t in tokens[1:]]
            elif head == "BOTTOM":
                bottom = [int(t) for t in tokens[1:]]
            elif head == "B":
                kv = _keyvals(tokens[1:], i + 1)
                flips = tuple(int(j) for j in kv["flips"].split(",")) if "flips" in kv else ()
                bunches.append((int(kv["id"]), int(kv["arc"]), int(kv["size"]), flips))
            elif head == "T":
                kv = _keyvals(tokens[1:], i + 1)
                if "arcs" in kv:
                    arcs = []
                    for item in kv["arcs"].split(","):
                        l, u = item.split(":")
                        arcs.append((int(l), int(u)))
                else:
                    arcs = [("bunch", int(kv["bunch"]))]
                boxes.append((arcs, int(kv["twists"])))
            elif head == "F":
                kv = _keyvals(tokens[1:], i + 1)
                value = kv["framing"]
                framings.append((int(kv["comp"]), value if value.startswith("bb") else int(value)))
            elif head == "DOT":
                kv = _keyvals(tokens[1:], i + 1)
                dots.append(int(kv["comp"]))
            elif head == "R":
                kv = _keyvals(tokens[3:], i + 1)
                ribbons.append((int(tokens[1]), int(tokens[2]), int(kv.get("diagonal", 0))))
            elif head == "BEGIN":
                kv = _keyvals(tokens[2:], i + 1)
                inner, i = _parse_block(lines, i + 1)
                if i >= len(lines) or lines[i].split()[0] != "END":
                    raise DiagramError("unterminated INSERT block")
                inserts.append((inner, int(kv["below"]), int(kv["above"])))
            elif head == "END":
                break
            else:
                raise DiagramError("line {}: unknown record {}".format(i + 1, head))
        except (KeyError, ValueError) as e:
            if isinstance(e, DiagramError):
                raise
            raise DiagramError("line {}: cannot parse '{}' ({})".format(i + 1, lines[i], e))
        i += 1

    thin = dict(crossings=crossings, loops=loops, bunches=bunches, inserts=inserts, ribbons=ribbons)
    if top is not None or bottom is not None:
        d = Tangle(top=top or [], bottom=bottom or [], **thin)
    else:
        d = LinkDiagram(**thin)
    comps = []
    if framings or dots:
        bad = _misplaced_arc(d)
        if bad is not None:
            raise DiagramError("components undefined, arc {} is not met exactly twice".format(bad), bad)
        comps = d.components()
    by_id = {b.id: b for b in d.bunches}
    resolved = []
    for arcs, twists in boxes:
        if arcs and arcs[0][0] == "bunch":
            if arcs[0][1] not in by_id:
                raise DiagramError("twist box on unknown bunch {}".format(arcs[0][1]))
            arcs = [(by_id[arcs[0][1]].arc, 1)]
        resolved.append((arcs, twists))
    fr = {}
    for comp, value in framings:
        if not 0 <= comp < len(comps):
            raise DiagramError("framing for unknown component {}".format(comp))
        fr[min(comps[comp])] = value
    dt = set()
    for comp in dots:
        if not 0 <= comp < len(comps):
            raise DiagramError("dot on unknown component {}".format(comp))
        dt.add(min(comps[comp]))
    return d.replace(boxes=resolved, framings=fr, dots=dt), i


def from_graph(g, **annotations):
    '''
    Diagram of an oriented planar graph without boxes
    '''
    assert not g.boxes
    fields = dict(crossings=planar.crossings(g), loops=g.loops, **annotations)
    if g.top or g.bottom:
        return Tangle(top=g.top, bottom=g.bottom, **fields)
    return LinkDiagram(**fields)


def _misplaced_arc(d):
    '''
    Smallest label not met exactly twice by crossings, endpoints and insert ports, or None
    '''
    counts = Counter(l for x in d.crossings for l in (x.a, x.b, x.c, x.d))
    counts.update(d.top)
    counts.update(d.bottom)
    counts.update(l for ins in d.inserts for l in (ins.below, ins.above))
    for l in sorted(counts):
        if counts[l] != 2 or l in d.loops:
            return l
    return None


def validate(d, expand=True):
    '''
    Check arc incidence, orientation, annotations and the Euler face count

    :return: ValidationReport(ok, failures, components, faces); failures are (check, element)
    '''
    failures = []
    bad = _misplaced_arc(d)
    if bad is not None:
        failures.append(("arc-incidence", bad))
        return ValidationReport(False, failures, 0, 0)
    g = d.graph()

    # each label enters one crossing (or port) and leaves another
    incoming = {}
    for x in d.crossings:
        if x.sign not in (1, -1):
            failures.append(("sign", x))
            continue
        for l in (x.a, x.d if x.sign > 0 else x.b):
            incoming[l] = incoming.get(l, 0) + 1
    outgoing = {}
    for x in d.crossings:
        for l in (x.c, x.b if x.sign > 0 else x.d):
            outgoing[l] = outgoing.get(l, 0) + 1
    for l in sorted(set(incoming) | set(outgoing)):
        if incoming.get(l, 0) > 1 or outgoing.get(l, 0) > 1:
            failures.append(("orientation", l))
            break

    labels = set(d.arcs())
    for b in d.bunches:
        if b.arc not in labels or b.size < 1:
            failures.append(("bunch", b.id))
    for box in d.boxes:
        for l, _ in box.arcs:
            if l not in labels:
                failures.append(("twist-box", l))
    for l in list(d.framings) + list(d.dots):
        if l not in labels:
            failures.append(("annotation", l))
    for ins in d.inserts:
        inner = validate(ins.tangle, expand=False)
        if not inner.ok:
            failures.append(("insert", inner.failures[0]))

    components = len(d.components())
    n_faces = 0
    if not failures and expand and d.is_annotated():
        try:
            e = expand_annotations(d)
        except (CassonError, AssertionError) as err:
            failures.append(("expand", str(err)))
        else:
            report = validate(e, expand=False)
            failures.extend(report.failures)
            return ValidationReport(not failures, failures, report.components, report.faces)

    if not failures and not d.is_annotated():
        closed = g
        if d.is_tangle:
            closed = planar.close(g) if len(d.top) == len(d.bottom) else None
        if closed is not None:
            n_faces = len(planar.faces(closed))
            for p, defect in enumerate(planar.euler_defects(closed)):
                if defect != 0:
                    failures.append(("euler", p))
    return ValidationReport(not failures, failures, components, n_faces)


def _compose(first, second):
    out = {l: second.get(r, r) for l, r in first.items()}
    for l, r in second.items():
        out.setdefault(l, r)
    return out


def expand_annotations(d):
    '''
    Replace bunches, nested inserts and twist boxes by explicit crossings

    Order: inserts are expanded recursively, bunches become blackboard cables,
    inserts are glued, orientations are re-derived, twist boxes become braids.
    A box on a single strand only shifts that component's framing.
    '''
    if not d.is_annotated():
        return d
    g = d.graph()
    thin = planar.orient(g)[2]
    size = {}
    for b in d.bunches:
        for comp in thin:
            if b.arc in comp:
                for l in comp:
                    size[l] = b.size
    g, copies = planar.cable(g, size)

    entries = {}
    for l, v in d.framings.items():
        entries.setdefault(l, []).append(v)
    dots = set(d.dots)
    ribbons = list(d.ribbons)
    rename = {}
    for k, ins in enumerate(d.inserts):
        inner = expand_annotations(ins.tangle)
        g, mapping, shift = planar.glue(g, k, inner.graph())
        rename = _compose(rename, mapping)
        look_inner = lambda l: rename.get(l + shift, l + shift)
        for l, v in inner.framings.items():
            entries.setdefault(look_inner(l), []).append(v)
        dots |= {look_inner(l) for l in inner.dots}
        ribbons += [RibbonMove(look_inner(r.a), look_inner(r.b), r.diagonal) for r in inner.ribbons]
    look = lambda l: rename.get(l, l)

    hints = dict(g.heads)
    og, _, comps = planar.orient(g)
    reversed_labels = set()
    for b in d.bunches:
        for j in b.flips:
            c = look(copies[b.arc][j - 1])
            for comp in comps:
                if c in comp:
                    reversed_labels.update(comp)
    if reversed_labels:
        og, _, comps = planar.orient(planar.reverse(og, reversed_labels))
    flipped = {l for l, h in og.heads.items() if hints.get(l) is not None and hints[l] != h}

    offsets = {}
    for box in d.boxes:
        section = []
        for l, up in box.arcs:
            order = copies[l] if up > 0 else copies[l][::-1]
            for c in order:
                c = look(c)
                u = up if c not in flipped else -up
                section.append((c, u > 0))
        if len(section) == 1:
            c = section[0][0]
            offsets[c] = offsets.get(c, 0) + box.twists
        else:
            og = planar.twist(og, section, box.twists)

    for l, t in offsets.items():
        entries.setdefault(l, []).append(relative_framing(t))
    framings = {}
    for l, vs in entries.items():
        framings.setdefault(look(l), []).extend(vs)
    out = from_graph(og, dots={look(l) for l in dots}, ribbons=ribbons)
    return out.replace(framings=_settle_framings(out, framings))


def _settle_framings(d, entries):
    '''
    Collect framing entries per component onto its smallest label

    An explicit integer wins; relative entries add up, and on a closed
    component they become blackboard framing plus the offset.
    '''
    index = d.component_index()
    per = {}
    for l, vs in entries.items():
        if l in index:
            per.setdefault(index[l], []).extend(vs)
    closed = _closed_components(d)
    out = {}
    for comp, vs in sorted(per.items()):
        key = min(d.components()[comp])
        ints = [v for v in vs if isinstance(v, int)]
        if ints:
            out[key] = ints[0]
            continue
        offset = sum(framing_offset(v) for v in vs)
        if comp in closed:
            if offset != 0:
                out[key] = self_writhe(d, comp) + offset
        elif offset != 0:
            out[key] = relative_framing(offset)
    return out


def _closed_framings(t, g):
    d = from_graph(g)
    entries = {}
    for l, v in t.framings.items():
        entries.setdefault(l, []).append(v)
    return _settle_framings(d, {l: vs for l, vs in entries.items() if l in set(d.arcs())})


def _closed_components(d):
    ports = set(d.top) | set(d.bottom)
    return {i for i, comp in enumerate(d.components()) if not ports.intersection(comp)}


def writhe(d):
    d = expand_annotations(d)
    return int(sum(x.sign for x in d.crossings))


def self_writhe(d, comp):
    '''
    Signed count of the crossings of component `comp` with itself
    '''
    index = d.component_index()
    return int(sum(x.sign for x in d.crossings if index[x.a] == comp and index[x.b] == comp))


def linking_matrix(d):
    '''
    Symmetric matrix of linking numbers (diagonal zero)
    '''
    d = expand_annotations(d)
    index = d.component_index()
    n = len(d.components())
    m = np.zeros((n, n), dtype=np.int64)
    for x in d.crossings:
        i, j = index[x.a], index[x.b]
        if i != j:
            m[i, j] += x.sign
            m[j, i] += x.sign
    assert (m % 2 == 0).all(), "odd crossing count between two closed components"
    return m // 2


def zero_framing(d, comp):
    '''
    Number of full twists turning the blackboard framing of `comp` into the 0-framing
    '''
    return -self_writhe(expand_annotations(d), comp)


def mirror(d):
    '''
    Switch every crossing; twists and framings change sign
    '''
    crossings = []
    for a, b, c, e, s in d.crossings:
        if s > 0:
            crossings.append((e, a, b, c, -1))
        else:
            crossings.append((b, c, e, a, 1))
    framings = {}
    for l, v in d.framings.items():
        framings[l] = -v if isinstance(v, int) else relative_framing(-framing_offset(v))
    boxes = [(box.arcs, -box.twists) for box in d.boxes]
    inserts = [(mirror(i.tangle), i.below, i.above) for i in d.inserts]
    return d.replace(crossings=crossings, framings=framings, boxes=boxes, inserts=inserts)


def reverse(d, comp):
    '''
    Reverse the orientation of component `comp` (a thin strand for annotated diagrams)
    '''
    labels = set(d.components()[comp])
    crossings = []
    for a, b, c, e, s in d.crossings:
        under, over = a in labels, b in labels
        if under and over:
            crossings.append((c, e, a, b, s))
        elif under:
            crossings.append((c, e, a, b, -s))
        elif over:
            crossings.append((a, b, c, e, -s))
        else:
            crossings.append((a, b, c, e, s))
    boxes = [(tuple((l, -u if l in labels else u) for l, u in box.arcs), box.twists) for box in d.boxes]
    return d.replace(crossings=crossings, boxes=boxes)


def canonical(d):
    '''
    Relabel by walking the components in order, each from its smallest label

    Crossings are sorted; nested tangles are canonicalized on their own.
    '''
    mapping = {}
    for comp in d.components():
        for l in comp:
            if l not in mapping:
                mapping[l] = len(mapping) + 1
    get = lambda l: mapping.get(l, l)
    crossings = sorted(tuple(get(l) for l in x[:4]) + (x.sign,) for x in d.crossings)
    bunches = sorted((b.id, get(b.arc), b.size, tuple(b.flips)) for b in d.bunches)
    boxes = [(tuple((get(l), u) for l, u in box.arcs), box.twists) for box in d.boxes]
    inserts = [(canonical(i.tangle), get(i.below), get(i.above)) for i in d.inserts]
    ribbons = [(get(r.a), get(r.b), r.diagonal) for r in d.ribbons]
    out = d.replace(
        crossings=crossings, loops=[get(l) for l in d.loops], framings={get(l): v for l, v in d.framings.items()},
        dots={get(l) for l in d.dots}, bunches=bunches, boxes=boxes, inserts=inserts, ribbons=ribbons,
        top=[get(l) for l in d.top], bottom=[get(l) for l in d.bottom],
    )
    return out


def canonical_dumps(d):
    return canonical(d).dumps()


def test_parse_and_validate_hopf():
    d = parse_pd("X+ 1 4 2 3\nX+ 4 1 3 2\n")
    report = validate(d)
    assert report.ok
    assert report.components == 2
    assert int(linking_matrix(d)[0, 1]) == 1


def test_arc_used_three_times():
    d = LinkDiagram([(1, 4, 2, 3, 1), (4, 1, 3, 1, 1)])
    report = validate(d)
    assert not report.ok
    assert report.failures[0] == ("arc-incidence", 1)


def test_single_strand_box_is_framing():
    d = LinkDiagram(loops=[1], boxes=[(((1, 1),), -2)])
    e = expand_annotations(d)
    assert len(e.crossings) == 0
    assert e.framing(0) == -2


def test_left_twist_on_two_strands():
    d = LinkDiagram(loops=[1], bunches=[(0, 1, 2)], boxes=[(((1, 1),), -1)])
    e = expand_annotations(d)
    assert [x.sign for x in e.crossings] == [-1, -1]
    assert len(e.components()) == 2


def test_mirror_twice():
    d = parse_pd("X+ 1 5 2 4\nX+ 3 1 4 6\nX+ 5 3 6 2\n")
    assert canonical_dumps(mirror(mirror(d))) == canonical_dumps(d)
    assert writhe(mirror(d)) == -3


def main():
    test_parse_and_validate_hopf()
    test_arc_used_three_times()
    test_single_strand_box_is_framing()
    test_left_twist_on_two_strands()
    test_mirror_twice()


if __name__ == "__main__":
    main()
