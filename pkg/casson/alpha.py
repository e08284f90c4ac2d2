# pylint: disable=C,R
'''
Recursive tangles alpha_n and the stage template of the level diagrams

alpha_0 is one thick strand carrying the -2 sigma framing box. alpha_n is the
Whitehead pattern cut open: a thick cap and a thick cup hooked into each
other by two crossings, alpha_{n-1} sitting on the left leg of the cap and
one left twist on each thick leg.

    top:    b3            b1
             \\  cup    /
              clasp (X1, X2)
             /  cap     \\
          [alpha_{n-1}]   \\
    bottom:  a1            a4
'''
from casson.diagram import LinkDiagram, Tangle, expand_annotations

ALPHA_SITE = 0


def alpha_tangle(n, mult=1, sigma=1):
    '''
    :param n: recursion depth
    :param mult: strands per thin strand of alpha_0 (1 for the immersed disk, 4 for the plane)
    :param sigma: signed first stage double point count, alpha_0 gets -2 sigma full twists
    :return: annotated Tangle with mult * 2^n strands on each side
    '''
    assert n >= 0 and mult >= 1
    if n == 0:
        return Tangle(top=[1], bottom=[1], bunches=[(ALPHA_SITE, 1, mult)], boxes=[(((1, 1),), -2 * sigma)])
    a1, a2, a3, a4, b1, b2, b3 = range(1, 8)
    size = mult * 2 ** (n - 1)
    return Tangle(
        crossings=[(b2, a3, b3, a2, 1), (a3, b2, a4, b1, 1)],
        bottom=[a1, a4],
        top=[b3, b1],
        inserts=[(alpha_tangle(n - 1, mult, sigma), a1, a2)],
        bunches=[(1, a1, size), (2, a2, size), (3, b1, size)],
        boxes=[(((a4, -1),), -1), (((b3, 1),), -1)],
    )


def count_twist_boxes(d):
    return len(d.boxes) + sum(count_twist_boxes(i.tangle) for i in d.inserts)


def boundary_strands(t):
    '''
    Number of endpoints on the top side once bunches are expanded
    '''
    index = t.component_index()
    return sum(t.bunch_size(index[l]) for l in t.top)


def _without_site_box(d):
    boxes = d.boxes if not any(b.id == ALPHA_SITE for b in d.bunches) else ()
    inserts = [(_without_site_box(i.tangle), i.below, i.above) for i in d.inserts]
    return d.replace(boxes=boxes, inserts=inserts)


def alpha_closure(n, mult=1, framing_box=False):
    '''
    Braid closure of alpha_n

    Without the alpha_0 box this is the n-fold untwisted Whitehead double of the unknot.
    '''
    t = alpha_tangle(n, mult)
    if not framing_box:
        t = _without_site_box(t)
    return t.closure()


def stage_diagram(n, mult=1, circles=1, sigma=1, flips=(), bands=None):
    '''
    Level link at radius n + 1: the closure of alpha_n clasped by a thick bunch of circles

    The main strand runs out of the top of the alpha_n box, under the circles,
    over them and back into the bottom of the box.

    :param circles: number of parallel circles in the completion bunch
    :param flips: copies (1-based) of the circle bunch that run backwards
    :param bands: instead of one bunch, groups `(size, twists, flipped)` of circles each
        clasping the main strand on its own, the group carrying a box with the
        twists of the bands that will attach it
    '''
    if bands is None:
        assert circles >= 1
        m1, m2, m3, c1, c2 = range(1, 6)
        return LinkDiagram(
            crossings=[(m1, c2, m2, c1, 1), (c2, m3, c1, m2, 1)],
            inserts=[(alpha_tangle(n, mult, sigma), m3, m1)],
            bunches=[(1, m1, mult * 2 ** n), (2, c1, circles, tuple(flips))],
        )
    assert bands
    crossings, bunches, boxes = [], [(1, 1, mult * 2 ** n)], []
    for i, (size, twists, flipped) in enumerate(bands):
        x, y, p, q = 4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4
        crossings += [(x, q, y, p, 1), (q, x + 4, p, y, 1)]
        bunches.append((2 + i, p, size, tuple(range(1, size + 1)) if flipped else ()))
        if twists:
            boxes.append((((p, 1),), twists))
    return LinkDiagram(
        crossings=crossings,
        inserts=[(alpha_tangle(n, mult, sigma), 4 * len(bands) + 1, 1)],
        bunches=bunches,
        boxes=boxes,
    )


def test_alpha_counts():
    for n in range(4):
        for mult in (1, 4):
            t = alpha_tangle(n, mult)
            assert boundary_strands(t) == mult * 2 ** n
            assert count_twist_boxes(t) == 2 * n + 1


def test_alpha_one_closure():
    d = alpha_closure(1)
    assert len(d.crossings) == 2
    assert len(d.components()) == 1


def test_stage_one():
    d = expand_annotations(stage_diagram(0))
    assert len(d.components()) == 2
    assert len(d.crossings) == 2


def main():
    test_alpha_counts()
    test_alpha_one_closure()
    test_stage_one()


if __name__ == "__main__":
    main()
