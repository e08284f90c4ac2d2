# pylint: disable=C,R
'''
SVG pictures of movie stages

Stage diagrams are drawn on the box-in-box template they were generated
from: the alpha_n boxes nest to the lower left, twist boxes are labelled
rectangles, the main strand is a closed stroke around the outer box (thick
and labelled with its strand count when it is a bunch) and the completion
circles cross its right side. Diagrams without a nested box are drawn as
one circle per component.
'''
import os
from collections import namedtuple

import numpy as np

from casson.errors import CassonError
from casson.util.atomic_file import atomic_write

RenderSpec = namedtuple("RenderSpec", "first last out_dir scale thick_width")
RenderSpec.__new__.__defaults__ = (1, None, ".", 1.0, 3.0)

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<svg width="{width:.2f}" height="{height:.2f}" viewBox="0 0 {width:.2f} {height:.2f}" version="1.1" xmlns="http://www.w3.org/2000/svg">
<g transform="scale({scale:.3f},{scale:.3f}) translate({tx:.2f},{ty:.2f})">
"""

POSTAMBLE = """\
</g></svg>
"""


class SVG:
    def __init__(self):
        self.lo = None
        self.hi = None
        self.commands = []

    def require(self, x, y):
        p = np.array([x, y], dtype=float)
        if self.lo is None:
            self.lo, self.hi = p.copy(), p.copy()
        else:
            self.lo = np.minimum(self.lo, p)
            self.hi = np.maximum(self.hi, p)

    def rect(self, x, y, w, h, css, rx=0.0, dash=False):
        self.require(x, y)
        self.require(x + w, y + h)
        extra = ' stroke-dasharray="6,4"' if dash else ''
        self.commands.append(
            '<rect class="{}" x="{:.2f}" y="{:.2f}" width="{:.2f}" height="{:.2f}" rx="{:.2f}" '
            'style="fill:none;stroke:#000000;stroke-width:{:.2f}"{}/>'.format(css[0], x, y, w, h, rx, css[1], extra))

    def ellipse(self, cx, cy, rx, ry, css, dash=False):
        self.require(cx - rx, cy - ry)
        self.require(cx + rx, cy + ry)
        extra = ' stroke-dasharray="6,4"' if dash else ''
        self.commands.append(
            '<ellipse class="{}" cx="{:.2f}" cy="{:.2f}" rx="{:.2f}" ry="{:.2f}" '
            'style="fill:none;stroke:#000000;stroke-width:{:.2f}"{}/>'.format(css[0], cx, cy, rx, ry, css[1], extra))

    def text(self, x, y, text, size=10):
        self.require(x, y - size)
        self.require(x + len(text) * size * 0.6, y)
        self.commands.append(
            '<text x="{:.2f}" y="{:.2f}" font-size="{}" font-family="monospace">{}</text>'.format(x, y, size, text))

    def to_string(self, scale=1.0):
        lo = self.lo if self.lo is not None else np.zeros(2)
        hi = self.hi if self.hi is not None else np.zeros(2)
        pad = 10.0
        size = (hi - lo + 2 * pad) * scale
        out = PREAMBLE.format(width=size[0], height=size[1], scale=scale, tx=pad - lo[0], ty=pad - lo[1])
        out += "\n".join(self.commands) + "\n"
        return out + POSTAMBLE


def _bunch_of(d, label):
    index = d.component_index()
    return d.bunch_size(index[label]) if label in index else 1


def _draw_tangle(svg, t, x, y, w, h, depth, spec):
    svg.rect(x, y, w, h, ("box", 1.0))
    svg.text(x + 4, y + 12, "depth {}".format(depth) if depth >= 0 else "pattern")
    sub = 0.6
    for ins in t.inserts:
        inner_depth = depth - 1 if ins.tangle.inserts or any(b.id == 0 for b in ins.tangle.bunches) else -1
        _draw_tangle(svg, ins.tangle, x + 0.08 * w, y + (1 - sub) * h - 0.05 * h, w * sub, h * sub, inner_depth, spec)
    for k, box in enumerate(t.boxes):
        bx = x + 0.74 * w
        by = y + 0.1 * h + k * 0.2 * h
        svg.rect(bx, by, 0.2 * w, 0.14 * h, ("twist-box", 1.0))
        svg.text(bx + 4, by + 0.1 * h, "{:d}".format(box.twists))
    if t.crossings:
        svg.text(x + 0.74 * w, y + 0.9 * h, "{}x".format(len(t.crossings)), size=8)


def _draw_stage(svg, d, spec):
    ins = d.inserts[0]
    depth = _alpha_depth(ins.tangle)
    w = h = 100.0 * (depth + 1)
    x, y = 0.0, 0.0
    main = _bunch_of(d, ins.above)
    width = spec.thick_width if main > 1 else 1.0
    dash = min(d.component_of(ins.above)) in d.dots
    margin = 0.15 * w
    svg.rect(x - margin, y - margin, w + 2 * margin, h + 2 * margin, ("component", width), rx=margin, dash=dash)
    if main > 1:
        svg.text(x - margin, y - margin - 4, str(main))
    _draw_tangle(svg, ins.tangle, x, y, w, h, depth, spec)

    circles = [b for b in d.bunches if b.arc not in d.component_of(ins.above)]
    right = x + w + margin
    count = sum(b.size for b in circles)
    step = min(20.0, (h + 2 * margin) / max(count, 1))
    twists = {box.arcs[0][0]: box.twists for box in d.boxes if len(box.arcs) == 1}
    k = 0
    for b in circles:
        for j in range(1, b.size + 1):
            cy = y - margin + step * (k + 0.5)
            svg.ellipse(right, cy, 0.2 * margin + 6, step * 0.4, ("component", 1.0))
            if j == 1 and twists.get(b.arc):
                bx = right + 0.2 * margin + 20
                svg.rect(bx, cy - 6, 24, 12, ("twist-box", 1.0))
                svg.text(bx + 2, cy + 4, "{:+d}".format(twists[b.arc]), size=8)
            if j in b.flips:
                svg.text(right + 0.2 * margin + 10, cy + 3, "-", size=8)
            k += 1


def _alpha_depth(t):
    if not t.inserts:
        return 0
    inner = t.inserts[0].tangle
    if inner.crossings and not inner.bunches:
        return 0
    return 1 + _alpha_depth(inner)


def _draw_components(svg, d):
    for i, comp in enumerate(d.components()):
        cx = 60.0 * i
        dash = min(comp) in d.dots
        svg.ellipse(cx, 0.0, 25.0, 25.0, ("component", 1.0), dash=dash)
        svg.text(cx - 10, 40.0, str(min(comp)), size=8)
    svg.text(0.0, 60.0, "{} crossings".format(len(d.crossings)))


def render_stage(d, spec=None):
    '''
    SVG document of one stage diagram
    '''
    spec = spec or RenderSpec()
    svg = SVG()
    if d.inserts and not d.is_tangle:
        _draw_stage(svg, d, spec)
    else:
        _draw_components(svg, d)
    return svg.to_string(spec.scale)


def render_svg(m, spec):
    '''
    Write `stage-<r>.svg` for every stage in [first, last]

    :return: list of written paths
    '''
    last = m.depth if spec.last is None else spec.last
    if spec.first < 1 or last > m.depth:
        raise CassonError("stage range {}..{} outside 1..{}".format(spec.first, last, m.depth))
    paths = []
    for r in range(spec.first, last + 1):
        path = os.path.join(spec.out_dir, "stage-{}.svg".format(r))
        atomic_write(path, render_stage(m.diagram(r), spec))
        paths.append(path)
    return paths


def test_render_deterministic():
    from casson.alpha import stage_diagram
    d = stage_diagram(1, 1, 2)
    a = render_stage(d)
    assert a == render_stage(d)
    assert a.count('class="component"') == 3


def main():
    test_render_deterministic()


if __name__ == "__main__":
    main()
