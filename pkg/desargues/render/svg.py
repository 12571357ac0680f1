#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# SVG figures of evaluated constructions.  Geometry is computed with exact rationals and only
# converted to text at the very end, so the output is byte identical between runs.
#
import logging
import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import List, Mapping, NamedTuple, Optional, Tuple, Union

from desargues import translate_gettext as _
from desargues.geometry import ProjPoint, ProjLine, to_affine

_logger = logging.getLogger('desargues')

SVG_NS = 'http://www.w3.org/2000/svg'
CANVAS_SIZE = 600  # Pixel length of the longer viewBox side.
POINT_RADIUS = 3
LEGEND_LINE_HEIGHT = 16
MARGIN = Fraction(1, 10)

Value = Union[ProjPoint, ProjLine]
XY = Tuple[Fraction, Fraction]


class Box(NamedTuple):
    """ Axis aligned world box, y axis pointing up. """
    min_x: Fraction
    min_y: Fraction
    max_x: Fraction
    max_y: Fraction

    @property
    def width(self) -> Fraction:
        return self.max_x - self.min_x

    @property
    def height(self) -> Fraction:
        return self.max_y - self.min_y

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return self.min_x <= x <= self.max_x and self.min_y <= y <= self.max_y


def figure_box(points: List[XY]) -> Box:
    """
    Bounding box of the finite points grown by a 10% margin of its longer side on every edge.
    A single point (or none) gets a unit box.
    """
    if not points:
        return Box(Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
    xs, ys = [p[0] for p in points], [p[1] for p in points]
    box = Box(min(xs), min(ys), max(xs), max(ys))
    pad = max(box.width, box.height) * MARGIN or Fraction(1)
    return Box(box.min_x - pad, box.min_y - pad, box.max_x + pad, box.max_y + pad)


def clip_line(line: ProjLine, box: Box) -> Optional[Tuple[XY, XY]]:
    """
    Exact segment of a line inside a box, None when the line misses the box or is the line at infinity.
    """
    a, b, c = (Fraction(v) for v in line.coords)
    if a == 0 and b == 0:
        return None

    hits = set()
    if b != 0:
        for x in (box.min_x, box.max_x):
            y = -(a * x + c) / b
            if box.min_y <= y <= box.max_y:
                hits.add((x, y))
    if a != 0:
        for y in (box.min_y, box.max_y):
            x = -(b * y + c) / a
            if box.min_x <= x <= box.max_x:
                hits.add((x, y))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


def _num(value) -> str:
    """ Fixed precision number text. """
    text = f'{float(value):.3f}'.rstrip('0').rstrip('.')
    return '0' if text in ('-0', '') else text


class SvgFigure:
    """
    Figure of named points and lines.  Element order follows the order of `bindings`, which for an
    evaluation report is declaration order.
    """

    def __init__(self, bindings: Mapping[str, Value], title: str = None):
        self.bindings = bindings
        self.title = title
        finite = [to_affine(v) for v in bindings.values() if isinstance(v, ProjPoint) and not v.is_ideal]
        self.box = figure_box(finite)
        self.scale = Fraction(CANVAS_SIZE) / max(self.box.width, self.box.height)

    def to_canvas(self, x: Fraction, y: Fraction) -> Tuple[str, str]:
        """ World to pixel coordinates, y flipped. """
        return _num((x - self.box.min_x) * self.scale), _num((self.box.max_y - y) * self.scale)

    def legend_entries(self) -> List[str]:
        entries = list()
        for name, value in self.bindings.items():
            if isinstance(value, ProjPoint) and value.is_ideal:
                entries.append(f'{name} = {value} ' + _('(ideal point)'))
            elif isinstance(value, ProjLine) and value.is_infinity:
                entries.append(f'{name} = {value} ' + _('(line at infinity)'))
        return entries

    def render(self) -> ET.Element:
        width = _num(self.box.width * self.scale)
        plot_height = self.box.height * self.scale
        legend = self.legend_entries()
        height = _num(plot_height + LEGEND_LINE_HEIGHT * len(legend))

        root = ET.Element('svg', xmlns=SVG_NS, version='1.1', width=width, height=height,
                          viewBox=f'0 0 {width} {height}')
        if self.title:
            ET.SubElement(root, 'title').text = self.title
        ET.SubElement(root, 'rect', x='0', y='0', width=width, height=height, fill='#ffffff')

        for name, value in self.bindings.items():
            if isinstance(value, ProjLine):
                self._line(root, name, value)
            elif not value.is_ideal:
                self._point(root, name, value)

        for index, entry in enumerate(legend):
            y = _num(plot_height + LEGEND_LINE_HEIGHT * (index + 1) - 4)
            text = ET.SubElement(root, 'text', x='4', y=y, fill='#333333', attrib={'class': 'legend'})
            text.set('font-family', 'monospace')
            text.set('font-size', '12')
            text.text = entry
        return root

    def _line(self, root: ET.Element, name: str, line: ProjLine):
        segment = clip_line(line, self.box)
        if segment is None:
            _logger.debug(f'line {name} {line} does not cross the figure.')
            return
        (x1, y1), (x2, y2) = (self.to_canvas(*p) for p in segment)
        element = ET.SubElement(root, 'line', id=f'line-{name}', x1=x1, y1=y1, x2=x2, y2=y2, stroke='#7a7a7a')
        element.set('stroke-width', '1')

    def _point(self, root: ET.Element, name: str, point: ProjPoint):
        cx, cy = self.to_canvas(*to_affine(point))
        ET.SubElement(root, 'circle', id=f'point-{name}', cx=cx, cy=cy, r=str(POINT_RADIUS), fill='#000000')
        label = ET.SubElement(root, 'text', x=_num(float(cx) + 5), y=_num(float(cy) - 5), fill='#000000')
        label.set('font-family', 'sans-serif')
        label.set('font-size', '12')
        label.text = name

    def to_string(self) -> str:
        root = self.render()
        ET.indent(root)
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding='unicode') + '\n'


def render_svg(bindings: Mapping[str, Value], title: str = None) -> str:
    return SvgFigure(bindings, title).to_string()


def write_svg(bindings: Mapping[str, Value], path: str, title: str = None):
    """
    Write a figure to disk.
    :param bindings: name to point/line mapping in drawing order.
    :param path: output file path.
    """
    with open(path, 'w', encoding='utf-8') as h:
        h.write(render_svg(bindings, title))
    _logger.debug(f'wrote {path}.')
