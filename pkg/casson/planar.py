# pylint: disable=C,R
'''
Planar 4-valent graphs with hinted strand directions

Every diagram constructor in the package works on this representation:
a crossing is a list of 4 labels counterclockwise with the under strand in
slots 0 and 2, and each label (an edge) carries a hint saying which of its two
occurrences is its head. Gluing, cabling and twisting move labels and hints
around; `orient` turns the result back into consistent PD crossings.

An occurrence is either a vertex slot `(v, s)` or a port:
`('top', i)`, `('bottom', i)` (tangle boundary, left to right) or
`('ib', k, j)`, `('it', k, j)` (bottom / top side of nested box `k`).
'''
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

PORT_RANK = {'bottom': 0, 'ib': 1, 'it': 2, 'top': 3}
GONE = ('gone',)


def is_vertex(occ):
    return not isinstance(occ[0], str)


def other(occs, occ):
    if occs[0] == occ:
        return occs[1]
    return occs[0]


def default_head(occs):
    '''
    Head hint for a label whose occurrences are both ports: the higher one on the page
    '''
    return max(occs, key=lambda occ: (PORT_RANK[occ[0]], occ[-1]))


class Graph:
    '''
    Mutable working copy of a diagram

    :param verts: list of [l0, l1, l2, l3], counterclockwise, under strand in slots 0 and 2
    :param heads: dict label -> occurrence that is the head of the label
    :param top: labels at the top boundary, left to right
    :param bottom: labels at the bottom boundary, left to right
    :param boxes: dict k -> [bottom side labels, top side labels] of nested box k
    :param loops: labels without any occurrence (crossingless circles)
    '''

    def __init__(self, verts=None, heads=None, top=None, bottom=None, boxes=None, loops=None):
        self.verts = [list(v) for v in (verts or [])]
        self.heads = dict(heads or {})
        self.top = list(top or [])
        self.bottom = list(bottom or [])
        self.boxes = {k: [list(b), list(t)] for k, (b, t) in (boxes or {}).items()}
        self.loops = set(loops or ())

    def copy(self):
        return Graph(self.verts, self.heads, self.top, self.bottom, self.boxes, self.loops)

    def occurrences(self):
        occ = {}
        for v, labels in enumerate(self.verts):
            for s, l in enumerate(labels):
                occ.setdefault(l, []).append((v, s))
        for i, l in enumerate(self.bottom):
            occ.setdefault(l, []).append(('bottom', i))
        for i, l in enumerate(self.top):
            occ.setdefault(l, []).append(('top', i))
        for k in sorted(self.boxes):
            below, above = self.boxes[k]
            for j, l in enumerate(below):
                occ.setdefault(l, []).append(('ib', k, j))
            for j, l in enumerate(above):
                occ.setdefault(l, []).append(('it', k, j))
        for l in self.loops:
            occ.setdefault(l, [])
        return occ

    def labels(self):
        return sorted(self.occurrences())

    def max_label(self):
        labels = self.labels()
        return max(labels) if labels else 0

    def set_label(self, occ, label):
        if is_vertex(occ):
            self.verts[occ[0]][occ[1]] = label
        elif occ[0] == 'top':
            self.top[occ[1]] = label
        elif occ[0] == 'bottom':
            self.bottom[occ[1]] = label
        else:
            self.boxes[occ[1]][0 if occ[0] == 'ib' else 1][occ[2]] = label

    def check(self):
        '''
        Structural check: every label has exactly two occurrences, or none for a loop

        :return: first offending label or None
        '''
        for l, occs in sorted(self.occurrences().items()):
            if len(occs) == 2:
                continue
            if len(occs) == 0 and l in self.loops:
                continue
            return l
        return None

    def relabel(self, mapping):
        '''
        Relabel in place with an injective mapping; labels missing from it are kept
        '''
        get = lambda l: mapping.get(l, l)
        self.verts = [[get(l) for l in v] for v in self.verts]
        self.top = [get(l) for l in self.top]
        self.bottom = [get(l) for l in self.bottom]
        self.boxes = {k: [[get(l) for l in b], [get(l) for l in t]] for k, (b, t) in self.boxes.items()}
        self.loops = {get(l) for l in self.loops}
        self.heads = {get(l): h for l, h in self.heads.items()}

    def merge(self, pairs):
        '''
        Identify labels pairwise (union-find, the smaller label survives)

        Ports whose labels are identified must already be removed from the graph;
        `settle` then renames the labels.

        :param pairs: iterable of (label, label)
        :return: mapping from every merged label to its representative
        '''
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for x, y in pairs:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
        return {l: find(l) for l in parent}


def settle(g, mapping, old_heads, old_occ):
    '''
    Rename merged labels and choose a head for each of them

    For each merged label the first member (representative first) whose old head
    survives gives the head; if its old head was a removed port, the strand keeps
    flowing through it into the other surviving occurrence.
    '''
    get = lambda l: mapping.get(l, l)
    g.verts = [[get(l) for l in v] for v in g.verts]
    g.top = [get(l) for l in g.top]
    g.bottom = [get(l) for l in g.bottom]
    g.boxes = {k: [[get(l) for l in b], [get(l) for l in t]] for k, (b, t) in g.boxes.items()}
    members = {}
    for l, r in mapping.items():
        members.setdefault(r, []).append(l)
    occ = g.occurrences()
    loops = {get(l) for l in g.loops}
    heads = {}
    for r, occs in occ.items():
        if not occs:
            continue
        head = None
        for m in [r] + sorted(l for l in members.get(r, []) if l != r):
            h = old_heads.get(m)
            if h in occs:
                head = h
                break
            mine = [o for o in old_occ.get(m, []) if o in occs]
            if h is not None and len(mine) == 1:
                head = other(occs, mine[0])
                break
        heads[r] = head if head is not None else occs[-1]
    for r in set(mapping.values()):
        if not occ.get(r):
            loops.add(r)
    g.loops = {l for l in loops if not occ.get(l)}
    g.heads = heads
    return g


def orient(g):
    '''
    Choose a consistent orientation of every strand

    Each component keeps the hinted direction of its smallest label.

    :return: (oriented graph, set of labels whose head moved, components as label lists in travel order)
    '''
    occ = g.occurrences()
    final = {}
    components = []
    for start in sorted(occ):
        if start in final:
            continue
        if not occ[start]:
            final[start] = None
            components.append([start])
            continue
        hint = g.heads.get(start)
        if hint not in occ[start]:
            hint = default_head(occ[start]) if not any(is_vertex(o) for o in occ[start]) else occ[start][1]
        final[start] = hint
        comp = [start]

        # forward
        l = start
        while is_vertex(final[l]):
            v, s = final[l]
            nxt_occ = (v, (s + 2) % 4)
            n = g.verts[v][nxt_occ[1]]
            if n in final:
                break
            final[n] = other(occ[n], nxt_occ)
            comp.append(n)
            l = n

        # backward, for strands ending on ports
        l = start
        while True:
            t = other(occ[l], final[l])
            if not is_vertex(t):
                break
            v, s = t
            prev_occ = (v, (s + 2) % 4)
            p = g.verts[v][prev_occ[1]]
            if p in final:
                break
            final[p] = prev_occ
            comp.insert(0, p)
            l = p
        components.append(comp)

    out = g.copy()
    out.heads = {l: h for l, h in final.items() if h is not None}
    flipped = {l for l, h in out.heads.items() if g.heads.get(l) is not None and g.heads[l] != h}
    components.sort(key=min)
    return out, flipped, components


def crossings(g):
    '''
    PD crossings `(a, b, c, d, sign)` of an oriented graph
    '''
    result = []
    for v, labels in enumerate(g.verts):
        s_in = 0 if g.heads[labels[0]] == (v, 0) else 2
        o_in = 1 if g.heads[labels[1]] == (v, 1) else 3
        tup = tuple(labels[(s_in + k) % 4] for k in range(4))
        result.append(tup + (1 if (o_in - s_in) % 4 == 3 else -1,))
    return result


def add_crossing(g, tup):
    '''
    Append a PD crossing to the graph; the two incoming labels get their heads here
    '''
    a, b, c, d, sign = tup
    v = len(g.verts)
    g.verts.append([a, b, c, d])
    g.heads[a] = (v, 0)
    if sign > 0:
        g.heads[d] = (v, 3)
    else:
        g.heads[b] = (v, 1)
    return v


def from_crossings(pd, top=(), bottom=(), boxes=None, loops=(), port_heads=None):
    '''
    Graph of oriented PD crossings

    :param port_heads: heads of labels that only meet ports, default is the higher port
    '''
    g = Graph([], {}, top, bottom, boxes, loops)
    for tup in pd:
        add_crossing(g, tup)
    for l, occs in g.occurrences().items():
        if l in g.heads or not occs:
            continue
        ports = [o for o in occs if not is_vertex(o)]
        if not ports:
            g.heads[l] = occs[-1]
        elif len(ports) == 1:
            g.heads[l] = ports[0]
        elif port_heads is not None and l in port_heads:
            g.heads[l] = port_heads[l]
        else:
            g.heads[l] = default_head(ports)
    return g


def pieces(g):
    '''
    Connected pieces of the 4-valent graph

    :return: (count, array with the piece index of every vertex)
    '''
    n = len(g.verts)
    if n == 0:
        return 0, np.zeros(0, dtype=int)
    rows, cols = [], []
    for occs in g.occurrences().values():
        vs = [o[0] for o in occs if is_vertex(o)]
        if len(vs) == 2:
            rows.append(vs[0])
            cols.append(vs[1])
    m = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    return connected_components(m, directed=False)


def faces(g):
    '''
    Faces of a closed graph: orbits of "next slot counterclockwise" after "other end of the label"
    '''
    occ = g.occurrences()
    seen = set()
    result = []
    for v in range(len(g.verts)):
        for s in range(4):
            if (v, s) in seen:
                continue
            face = []
            cur = (v, s)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                far = other(occ[g.verts[cur[0]][cur[1]]], cur)
                if not is_vertex(far):
                    break
                cur = (far[0], (far[1] + 1) % 4)
            result.append(face)
    return result


def euler_defects(g):
    '''
    Per connected piece, F - V - 2 (zero everywhere for a planar diagram)
    '''
    n, piece = pieces(g)
    counts_v = np.bincount(piece, minlength=n)
    counts_f = np.zeros(n, dtype=int)
    for face in faces(g):
        counts_f[piece[face[0][0]]] += 1
    return [int(f - v - 2) for v, f in zip(counts_v, counts_f)]


def close(g):
    '''
    Braid closure of a tangle: top endpoint i is joined to bottom endpoint i around the right
    '''
    assert len(g.top) == len(g.bottom), "closure needs as many top as bottom endpoints"
    old_occ = g.occurrences()
    out = g.copy()
    pairs = list(zip(g.top, g.bottom))
    out.top, out.bottom = [], []
    mapping = out.merge(pairs)
    out.loops |= {t for t, b in pairs if t == b}
    return settle(out, mapping, g.heads, old_occ)


def glue(outer, k, inner):
    '''
    Replace box `k` of `outer` by the tangle `inner`

    Bottom endpoint j of `inner` is glued to bottom side label j of the box, and
    likewise on top. Labels of `outer` survive the gluing.

    :return: (graph, mapping of merged labels, shift added to the labels of `inner`)
    '''
    below, above = outer.boxes[k]
    assert len(below) == len(inner.bottom), "box bottom has {} strands, tangle has {}".format(len(below), len(inner.bottom))
    assert len(above) == len(inner.top), "box top has {} strands, tangle has {}".format(len(above), len(inner.top))
    assert not inner.boxes, "inner tangle must be expanded"

    shift = outer.max_label()
    inner = inner.copy()
    inner.relabel({l: l + shift for l in inner.labels()})
    off = len(outer.verts)

    def move(occ):
        if occ is None:
            return None
        if is_vertex(occ):
            return (occ[0] + off, occ[1])
        return GONE

    old_occ = outer.occurrences()
    old_heads = dict(outer.heads)
    for l, occs in inner.occurrences().items():
        old_occ[l] = [move(o) for o in occs]
        old_heads[l] = move(inner.heads.get(l))

    g = outer.copy()
    del g.boxes[k]
    g.verts += inner.verts
    g.loops |= inner.loops
    pairs = list(zip(below, inner.bottom)) + list(zip(above, inner.top))
    mapping = g.merge(pairs)
    return settle(g, mapping, old_heads, old_occ), mapping, shift


def cable(g, size):
    '''
    Blackboard parallel copies of an oriented graph

    Copy 1 keeps the original label and copies are numbered from the left of the
    direction of travel. At a crossing of an under strand with `ku` copies and an
    over strand with `ko` copies the result is a `ku` x `ko` grid of crossings of
    the original sign.

    :param size: dict label -> number of copies, absent labels keep one
    :return: (graph, dict label -> list of copy labels)
    '''
    nxt = g.max_label() + 1
    copies = {}
    for l in g.labels():
        k = size.get(l, 1)
        assert k >= 1
        copies[l] = [l] + list(range(nxt, nxt + k - 1))
        nxt += k - 1

    pd = []
    for a, b, c, d, s in crossings(g):
        ku, ko = len(copies[a]), len(copies[b])
        if ku == 1 and ko == 1:
            pd.append((a, b, c, d, s))
            continue
        v, h = {}, {}
        for i in range(1, ku + 1):
            v[i, 0] = copies[a][i - 1]
            v[i, ko] = copies[c][i - 1]
            for y in range(1, ko):
                v[i, y] = nxt
                nxt += 1
        for y in range(1, ko + 1):
            j = ko + 1 - y if s > 0 else y
            h[y, 0] = copies[d][j - 1]
            h[y, ku] = copies[b][j - 1]
            for i in range(1, ku):
                h[y, i] = nxt
                nxt += 1
        for y in range(1, ko + 1):
            for i in range(1, ku + 1):
                pd.append((v[i, y - 1], h[y, i], v[i, y], h[y, i - 1], s))

    port_heads = {}

    def spread(key, l):
        # copy order on the page at a horizontal cut
        is_head = g.heads.get(l) == key
        upward = is_head == (key[0] in ('top', 'ib'))
        order = copies[l] if upward else copies[l][::-1]
        return order, is_head

    top, bottom, boxes = [], [], {k: [[], []] for k in g.boxes}
    for i, l in enumerate(g.bottom):
        order, is_head = spread(('bottom', i), l)
        for c in order:
            if is_head:
                port_heads[c] = ('bottom', len(bottom))
            bottom.append(c)
    for i, l in enumerate(g.top):
        order, is_head = spread(('top', i), l)
        for c in order:
            if is_head:
                port_heads[c] = ('top', len(top))
            top.append(c)
    for k in sorted(g.boxes):
        for side, kind in ((0, 'ib'), (1, 'it')):
            for j, l in enumerate(g.boxes[k][side]):
                order, is_head = spread((kind, k, j), l)
                for c in order:
                    if is_head:
                        port_heads[c] = (kind, k, len(boxes[k][side]))
                    boxes[k][side].append(c)
    loops = {c for l in g.loops for c in copies[l]}

    out = from_crossings(pd, top, bottom, boxes, loops, port_heads)
    out.heads.update(port_heads)
    return out, copies


def generator(bl, br, tl, tr, up_left, up_right, positive):
    '''
    PD crossing of a braid generator

    A positive generator takes the strand from bottom left to top right over the
    other one. `up_left` is the direction of the strand entering at bottom left.
    '''
    if positive:
        under_up, over_up = up_right, up_left
        if under_up:
            tup = (br, tr, tl, bl)
            sign = 1 if over_up else -1
        else:
            tup = (tl, bl, br, tr)
            sign = -1 if over_up else 1
    else:
        under_up, over_up = up_left, up_right
        if under_up:
            tup = (bl, br, tr, tl)
            sign = -1 if over_up else 1
        else:
            tup = (tr, tl, bl, br)
            sign = 1 if over_up else -1
    return tup + (sign,)


def twist(g, section, twists):
    '''
    Insert full twists on parallel strands of an oriented graph

    :param section: list of (label, up) left to right on the page; `up` tells whether the label runs upward there
    :param twists: number of full twists, positive is right handed
    :return: new graph (oriented)
    '''
    k = len(section)
    if k < 2 or twists == 0:
        return g.copy()
    labels = [l for l, _ in section]
    assert len(set(labels)) == k, "a twist box crosses each strand once"

    out = g.copy()
    occ = g.occurrences()
    nxt = g.max_label() + 1
    cur = []
    ups = []
    finish = []
    for l, up in section:
        loop = not occ.get(l)
        if up or loop:
            cur.append(l)
        else:
            out.set_label(g.heads[l], nxt)
            out.heads[nxt] = g.heads[l]
            cur.append(nxt)
            nxt += 1
        ups.append(bool(up))
        finish.append((l, up, loop, None if loop else g.heads[l]))

    positive = twists > 0
    for _ in range(k * abs(twists)):
        for i in range(k - 1):
            tl, tr = nxt, nxt + 1
            nxt += 2
            add_crossing(out, generator(cur[i], cur[i + 1], tl, tr, ups[i], ups[i + 1], positive))
            # the strand from bottom left ends at top right
            cur[i], cur[i + 1] = tl, tr
            ups[i], ups[i + 1] = ups[i + 1], ups[i]

    for p, (l, up, loop, head) in enumerate(finish):
        last = cur[p]
        if up and not loop:
            out.set_label(head, last)
            out.heads[last] = head
        else:
            v = [o for o in _vertex_slots(out, last)]
            for o in v:
                out.set_label(o, l)
            if last in out.heads:
                out.heads[l] = out.heads.pop(last)
            out.loops.discard(l)
    return out


def _vertex_slots(g, label):
    return [(v, s) for v, labels in enumerate(g.verts) for s, x in enumerate(labels) if x == label]


def reverse(g, labels):
    '''
    Flip the direction hint of the given labels
    '''
    out = g.copy()
    occ = g.occurrences()
    for l in labels:
        if l in out.heads and len(occ.get(l, [])) == 2:
            out.heads[l] = other(occ[l], out.heads[l])
    return out


def test_faces_of_hopf():
    g = from_crossings([(1, 4, 2, 3, 1), (4, 1, 3, 2, 1)])
    assert len(faces(g)) == 4
    assert euler_defects(g) == [0]


def test_orient_keeps_smallest_label():
    pd = [(1, 5, 2, 4, 1), (3, 1, 4, 6, 1), (5, 3, 6, 2, 1)]
    out, flipped, comps = orient(from_crossings(pd))
    assert flipped == set()
    assert comps == [[1, 2, 3, 4, 5, 6]]
    assert sorted(crossings(out)) == sorted(pd)


def test_cable_of_hopf():
    g = from_crossings([(1, 4, 2, 3, 1), (4, 1, 3, 2, 1)])
    out, copies = cable(g, {1: 2, 2: 2})
    assert len(out.verts) == 4
    assert out.check() is None
    assert euler_defects(out) == [0]
    assert len(copies[1]) == 2


def test_twist_two_strands():
    g = Graph(loops={1, 2})
    out = twist(g, [(1, True), (2, True)], -1)
    out, _, comps = orient(out)
    assert [c[-1] for c in crossings(out)] == [-1, -1]
    assert len(comps) == 2


def main():
    test_faces_of_hopf()
    test_orient_keeps_smallest_label()
    test_cable_of_hopf()
    test_twist_two_strands()


if __name__ == "__main__":
    main()
