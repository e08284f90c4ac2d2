# pylint: disable=C,R
'''
Based signed trees of Casson handles

A tree is stored as its finite part (edges `(parent, child, sign)`) plus a
continuation rule on every leaf telling how the tree goes on:
`Stop`, `RepeatPlus`, `RepeatMinus` or `RepeatSubtree:<v>`.
'''
import json
from collections import namedtuple
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from casson.errors import TreeError

STOP = "Stop"
REPEAT_PLUS = "RepeatPlus"
REPEAT_MINUS = "RepeatMinus"
SUBTREE = "RepeatSubtree"


class Kinkiness(namedtuple("Kinkiness", "positive negative")):
    __slots__ = ()

    def swap(self):
        return Kinkiness(self.negative, self.positive)


class SignedTree:
    '''
    Immutable based signed tree

    :param root: vertex id of the base point
    :param edges: list of (parent, child, sign), sign in {+1, -1}
    :param continuation: dict leaf -> rule; leaves without a rule stop
    '''

    def __init__(self, root=0, edges=(), continuation=None):
        self.root = root
        self.edges = tuple((int(p), int(c), int(s)) for p, c, s in edges)
        self.continuation = {int(v): r for v, r in (continuation or {}).items() if r != STOP}
        self._children = {}
        for p, c, s in self.edges:
            self._children.setdefault(p, []).append((c, s))
        self._grafts = any(r.startswith(SUBTREE) for r in self.continuation.values())
        self._text = {}
        self._check()

    def _check(self):
        seen = {self.root}
        for p, c, s in self.edges:
            if s not in (1, -1):
                raise TreeError("edge {} -> {} has sign {}".format(p, c, s))
            if c in seen:
                raise TreeError("vertex {} appears twice as a child".format(c))
            seen.add(c)
        # connected: every vertex reachable from the root
        reached = set()
        stack = [self.root]
        while stack:
            v = stack.pop()
            reached.add(v)
            stack.extend(c for c, _ in self._children.get(v, []))
        if reached != seen:
            raise TreeError("edges do not form a tree rooted at {}".format(self.root))
        for v, rule in self.continuation.items():
            if v not in seen or self._children.get(v):
                raise TreeError("continuation attached to non-leaf {}".format(v))
            if rule.startswith(SUBTREE):
                target = int(rule.split(":")[1])
                if target not in seen or not self._children.get(target):
                    raise TreeError("{} must point at an inner vertex".format(rule))
            elif rule not in (REPEAT_PLUS, REPEAT_MINUS):
                raise TreeError("unknown continuation {}".format(rule))

    def vertices(self):
        return [self.root] + [c for _, c, _ in self.edges]

    def children(self, v):
        return list(self._children.get(v, []))

    def leaves(self):
        return [v for v in self.vertices() if not self._children.get(v)]

    def sigma(self, v):
        '''
        Signed count of the double points of the kinky handle at `v`
        '''
        return sum(s for _, s in self.children(v))

    def levels(self):
        level = {self.root: 0}
        for p, c, _ in self.edges:
            level[c] = level[p] + 1
        return level

    def depth(self):
        return max(self.levels().values())

    def vertices_at(self, level):
        return sorted(v for v, l in self.levels().items() if l == level)

    def expand(self, depth):
        '''
        Materialise continuation rules until every leaf with a rule sits at `depth`
        '''
        edges = list(self.edges)
        rules = dict(self.continuation)
        level = self.levels()
        nxt = max(self.vertices()) + 1
        pending = sorted(v for v in rules if level[v] < depth)
        if not pending:
            return self
        while pending:
            v = pending.pop(0)
            rule = rules.pop(v)
            if rule in (REPEAT_PLUS, REPEAT_MINUS):
                c = nxt
                nxt += 1
                edges.append((v, c, 1 if rule == REPEAT_PLUS else -1))
                level[c] = level[v] + 1
                rules[c] = rule
                if level[c] < depth:
                    pending.append(c)
            else:
                queue = [(int(rule.split(":")[1]), v)]
                while queue:
                    src, dst = queue.pop(0)
                    kids = self.children(src)
                    if not kids:
                        if src in self.continuation:
                            rules[dst] = self.continuation[src]
                            if level[dst] < depth:
                                pending.append(dst)
                        continue
                    if level[dst] >= depth:
                        # stop grafting at the comparison depth
                        rules[dst] = "{}:{}".format(SUBTREE, src)
                        continue
                    for c, s in kids:
                        d = nxt
                        nxt += 1
                        edges.append((dst, d, s))
                        level[d] = level[dst] + 1
                        queue.append((c, d))
            pending.sort()
        return SignedTree(self.root, edges, rules)

    def mirror(self):
        swap = {REPEAT_PLUS: REPEAT_MINUS, REPEAT_MINUS: REPEAT_PLUS}
        return SignedTree(
            self.root,
            [(p, c, -s) for p, c, s in self.edges],
            {v: swap.get(r, r) for v, r in self.continuation.items()},
        )

    def serialize(self, v=None):
        '''
        Canonical string of the subtree at `v`: children sorted by (sign, string)

        A `RepeatSubtree` rule pointing back at a vertex on the current path is written
        as the number of levels up to it.
        '''
        return self._serialize(self.root if v is None else v, ())

    def _serialize(self, v, path):
        key = (v, path) if self._grafts else v
        if key in self._text:
            return self._text[key]
        path = path + (v,)
        kids = sorted((-s, self._serialize(c, path)) for c, s in self.children(v))
        text = "(" + "".join(("+" if s < 0 else "-") + t for s, t in kids) + ")"
        rule = self.continuation.get(v)
        if rule is not None and rule.startswith(SUBTREE):
            target = int(rule.split(":")[1])
            if target in path:
                text += "S{}".format(path[::-1].index(target))
            else:
                text += "S" + self._serialize(target, path)
        elif rule is not None:
            text += "P" if rule == REPEAT_PLUS else "M"
        self._text[key] = text
        return text

    def canonical(self):
        '''
        Relabel in preorder with canonically sorted children
        '''
        ids = {}
        edges = []

        def visit(v):
            ids[v] = len(ids)
            kids = sorted(self.children(v), key=lambda cs: (-cs[1], self.serialize(cs[0])))
            for c, s in kids:
                edges.append((v, c, s))
                visit(c)

        visit(self.root)
        rules = {}
        for v, r in self.continuation.items():
            if r.startswith(SUBTREE):
                r = "{}:{}".format(SUBTREE, ids[int(r.split(":")[1])])
            rules[ids[v]] = r
        return SignedTree(0, [(ids[p], ids[c], s) for p, c, s in edges], rules)

    def to_json(self):
        t = self.canonical()
        return {
            "root": t.root,
            "edges": [list(e) for e in t.edges],
            "continuation": {str(v): r for v, r in sorted(t.continuation.items())},
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"

    def __eq__(self, other):
        return isinstance(other, SignedTree) and self.serialize() == other.serialize()

    def __hash__(self):
        return hash(self.serialize())

    def __repr__(self):
        return "SignedTree({})".format(self.serialize())


def from_json(obj):
    return SignedTree(obj.get("root", 0), obj.get("edges", []), obj.get("continuation", {}))


def loads(text):
    return from_json(json.loads(text))


def make_ch_plus(depth):
    '''
    The Casson handle with one positive double point at each stage
    '''
    assert depth >= 0
    edges = [(i, i + 1, 1) for i in range(depth)]
    return SignedTree(0, edges, {depth: REPEAT_PLUS})


def make_ch_mn(m, n, depth):
    '''
    Root with m positive and n negative edges, each continued as CH+ (or its mirror)

    :param depth: length of the path hanging below each root edge
    '''
    if m < 0 or n < 0 or (m, n) == (0, 0):
        raise TreeError("CH_{{m,n}} needs m, n >= 0 and (m, n) != (0, 0), got ({}, {})".format(m, n))
    assert depth >= 0
    edges = []
    rules = {}
    nxt = 1
    for s in [1] * m + [-1] * n:
        prev = 0
        for _ in range(depth + 1):
            edges.append((prev, nxt, s))
            prev = nxt
            nxt += 1
        rules[prev] = REPEAT_PLUS if s > 0 else REPEAT_MINUS
    return SignedTree(0, edges, rules)


def _embeds(cand, base):
    '''
    Sign preserving embedding of `base` into `cand` fixing the roots (finite parts only)
    '''
    memo = {}

    def ok(cv, bv):
        key = (cv, bv)
        if key not in memo:
            bk = base.children(bv)
            ck = cand.children(cv)
            if not bk:
                memo[key] = True
            elif len(bk) > len(ck):
                memo[key] = False
            else:
                options = [{j for j, (c, cs) in enumerate(ck) if bs == cs and ok(c, b)} for b, bs in bk]
                if not all(options):
                    memo[key] = False
                elif sum(len(o) for o in options) == len(set().union(*options)):
                    # disjoint choices, nothing to match
                    memo[key] = True
                else:
                    rows = [i for i, o in enumerate(options) for _ in o]
                    cols = [j for o in options for j in sorted(o)]
                    graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(bk), len(ck)))
                    match = maximum_bipartite_matching(graph, perm_type='column')
                    memo[key] = bool((match >= 0).all())
        return memo[key]

    return ok(cand.root, base.root)


def refines(candidate, base, depth=None):
    '''
    True iff the tree of `base` embeds into the tree of `candidate` (base point and signs preserved)

    :param depth: comparison depth, default the depth of the finite part of `base`
    '''
    if depth is None:
        depth = base.depth()
    return _refines(candidate, base, depth)


@lru_cache(maxsize=8192)
def _refines(candidate, base, depth):
    return _embeds(candidate.expand(depth), base.expand(depth))


_STOPPED = ("stop",)
_PLUS = ("plus",)
_MINUS = ("minus",)


def _state(t, v):
    '''
    What the infinite tree of `t` looks like below `v`: an inner vertex, nothing, or an endless signed path
    '''
    while not t.children(v):
        rule = t.continuation.get(v)
        if rule is None:
            return _STOPPED
        if rule == REPEAT_PLUS:
            return _PLUS
        if rule == REPEAT_MINUS:
            return _MINUS
        v = int(rule.split(":")[1])
    return ("vertex", v)


def _state_children(t, state):
    if state == _PLUS:
        return [(1, _PLUS)]
    if state == _MINUS:
        return [(-1, _MINUS)]
    if state == _STOPPED:
        return []
    kids = sorted(t.children(state[1]), key=lambda cs: (-cs[1], t.serialize(cs[0])))
    return [(s, _state(t, c)) for c, s in kids]


def _plain_rule(states):
    kinds = {s for s in states if s not in (None, _STOPPED)}
    if not kinds:
        return STOP
    if kinds == {_PLUS}:
        return REPEAT_PLUS
    if kinds == {_MINUS}:
        return REPEAT_MINUS
    return None


def common_refinement(a, b):
    '''
    Union of the two trees with the base points identified

    Children of equal sign are paired greedily in canonical order. Continuation rules
    are followed into the infinite trees: a leaf going on as `RepeatPlus` in one tree and
    `RepeatMinus` in the other gets both a positive and a negative endless path. When a
    pair of positions comes back on its own path the leaf repeats that ancestor.
    '''
    edges = []
    rules = {}
    counter = [1]

    def merge(sa, sb, dst, path):
        rule = _plain_rule((sa, sb))
        if rule is not None:
            if rule != STOP:
                rules[dst] = rule
            return
        if (sa, sb) in path:
            rules[dst] = "{}:{}".format(SUBTREE, path[(sa, sb)])
            return
        path = dict(path)
        path[(sa, sb)] = dst
        ka = _state_children(a, sa) if sa is not None else []
        kb = _state_children(b, sb) if sb is not None else []
        for sign in (1, -1):
            xa = [st for s, st in ka if s == sign]
            xb = [st for s, st in kb if s == sign]
            for i in range(max(len(xa), len(xb))):
                d = counter[0]
                counter[0] += 1
                edges.append((dst, d, sign))
                merge(xa[i] if i < len(xa) else None, xb[i] if i < len(xb) else None, d, path)

    merge(_state(a, a.root), _state(b, b.root), 0, {})
    return SignedTree(0, edges, rules).canonical()


def first_stage_kinkiness(t):
    '''
    (positive, negative) double point counts of the first stage; exact for CH_{m,n}, an upper bound in general
    '''
    kids = t.children(t.root)
    return Kinkiness(sum(1 for _, s in kids if s > 0), sum(1 for _, s in kids if s < 0))


def is_exact_kinkiness(t):
    '''
    True when the tree has the CH_{m,n} shape, for which the first stage counts are the kinkiness
    '''
    k = first_stage_kinkiness(t)
    if k == (0, 0):
        return False
    depth = max(t.depth() - 1, 0)
    return t.expand(depth + 1) == make_ch_mn(k.positive, k.negative, depth).expand(depth + 1)


def genus_bound(t):
    return max(first_stage_kinkiness(t))


def core_framing(t):
    k = first_stage_kinkiness(t)
    return 2 * (k.positive - k.negative)


def enumerate_trees(max_edges):
    '''
    All signed trees with at most `max_edges` edges and no continuation, up to canonical form
    '''
    found = {SignedTree().serialize(): SignedTree()}
    frontier = [SignedTree()]
    for _ in range(max_edges):
        nxt = []
        for t in frontier:
            new_id = max(t.vertices()) + 1
            for v in t.vertices():
                for s in (1, -1):
                    u = SignedTree(t.root, list(t.edges) + [(v, new_id, s)])
                    key = u.serialize()
                    if key not in found:
                        found[key] = u
                        nxt.append(u)
        frontier = nxt
    return [found[k] for k in sorted(found)]


def test_ch_plus():
    t = make_ch_plus(3)
    assert len(t.edges) == 3
    assert first_stage_kinkiness(t) == (1, 0)
    assert core_framing(t) == 2
    assert make_ch_mn(1, 0, 2) == t


def test_ch_mn():
    t = make_ch_mn(2, 1, 1)
    assert sorted(s for _, s in t.children(t.root)) == [-1, 1, 1]
    assert genus_bound(t) == 2
    assert make_ch_mn(0, 2, 1) == make_ch_mn(2, 0, 1).mirror()
    assert is_exact_kinkiness(t)


def test_refines():
    assert refines(make_ch_mn(2, 1, 1), make_ch_mn(2, 0, 1))
    assert not refines(make_ch_mn(1, 0, 1), make_ch_mn(2, 0, 1))
    a, b = make_ch_mn(1, 0, 1), make_ch_mn(0, 1, 1)
    c = common_refinement(a, b)
    assert refines(c, a) and refines(c, b)


def main():
    test_ch_plus()
    test_ch_mn()
    test_refines()


if __name__ == "__main__":
    main()
