#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
from .svg import Box, SvgFigure, figure_box, clip_line, render_svg, write_svg

__all__ = ['Box', 'SvgFigure', 'figure_box', 'clip_line', 'render_svg', 'write_svg']
