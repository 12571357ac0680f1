#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#

from desargues import translate_gettext as _


#
# Geometry kernel custom exception classes.
#
class GeometryError(Exception):
    """ Base class for every exact geometry failure. """
    def __init__(self, subject, message=_('Geometric operation is undefined for the given input.')):
        self.subject = subject
        self.message = message
        super().__init__(f'{subject}: {message}')


class IdealPointError(GeometryError):
    """ An affine operation was asked of a point at infinity. """
    def __init__(self, subject, message=_('Point lies at infinity (z = 0) and has no affine coordinates.')):
        super().__init__(subject, message)


class CoincidentPointsError(GeometryError):
    """ Two points that must be distinct are projectively equal. """
    def __init__(self, subject, message=_('Points coincide, the joining line is undefined.')):
        super().__init__(subject, message)


class CoincidentLinesError(GeometryError):
    """ Two lines that must be distinct are projectively equal. """
    def __init__(self, subject, message=_('Lines coincide, the meeting point is undefined.')):
        super().__init__(subject, message)


class NotCollinearError(GeometryError):
    """ A signed ratio was requested for points that do not share a line. """
    def __init__(self, subject, message=_('Points are not collinear.')):
        super().__init__(subject, message)


class CoincidentWithEndpointError(GeometryError):
    """ The ratio point coincides with one of the segment end points. """
    def __init__(self, subject, message=_('Point coincides with a segment end point, the ratio is undefined.')):
        super().__init__(subject, message)


class DegenerateTriangleError(GeometryError):
    """ Triangle vertices are collinear or repeated. """
    def __init__(self, subject, message=_('Triangle vertices are collinear or not distinct.')):
        super().__init__(subject, message)


class DegenerateTransversalError(GeometryError):
    """ Transversal coincides with a side line or passes through a vertex. """
    def __init__(self, subject, message=_('Transversal coincides with a side or passes through a vertex.')):
        super().__init__(subject, message)


class IdealFootError(GeometryError):
    """ A transversal foot lies at infinity, use the determinant criterion instead. """
    def __init__(self, subject, message=_('Transversal foot lies at infinity, ratio product is undefined.')):
        super().__init__(subject, message)


class DegeneratePairError(GeometryError):
    """ Triangle pair violates the correspondence invariants. """
    def __init__(self, subject, message=_('Triangle pair is degenerate.')):
        super().__init__(subject, message)


class NotPerspectiveError(GeometryError):
    """ The vertex-join lines of a triangle pair are not concurrent. """
    def __init__(self, subject, message=_('Triangles are not in perspective from a point.')):
        super().__init__(subject, message)


class AxisMissingError(GeometryError):
    """ The corresponding side intersections of a triangle pair are not collinear. """
    def __init__(self, subject, message=_('Side intersection points are not collinear.')):
        super().__init__(subject, message)


class AxisUndeterminedError(GeometryError):
    """ The points that should span an axis all coincide. """
    def __init__(self, subject, message=_('Axis points coincide, the axis line is undetermined.')):
        super().__init__(subject, message)


class DegenerateQuadrilateralError(GeometryError):
    """ Quadrilateral input violates the complete quadrilateral invariants. """
    def __init__(self, subject, message=_('Quadrilateral is degenerate.'), witnesses=None):
        self.witnesses = witnesses or {}
        super().__init__(subject, message)


class DegenerateConfigError(GeometryError):
    """ Parallelogram configuration could not be constructed. """
    def __init__(self, subject, message=_('Parallelogram configuration is degenerate.')):
        super().__init__(subject, message)


class TheoremFalsifiedError(Exception):
    """
    A theorem postcondition failed on exact input.  With exact arithmetic this always points at
    an implementation bug, so the exact coordinates are kept for the report.
    """
    def __init__(self, theorem, dump, message=_('Theorem postcondition violated on exact input.')):
        self.theorem = theorem
        self.dump = dump
        self.message = message
        super().__init__(f'{theorem}: {message}')


#
# Construction language exception classes.
#
class GeoParseError(Exception):
    """ Base class for construction file parse failures. """
    def __init__(self, span, message):
        self.span = span
        self.message = message
        super().__init__(f'{span.line}:{span.column}: {message}')


class GeoSyntaxError(GeoParseError):
    """ Unexpected token or malformed statement. """
    def __init__(self, span, expected, found=None):
        self.expected = tuple(sorted(expected))
        self.found = found
        message = _('expected') + ' ' + ', '.join(self.expected)
        if found is not None:
            message += ' ' + _('but found') + f' {found!r}'
        super().__init__(span, message)


class GeoNameError(GeoParseError):
    """ Identifier used before declaration, declared twice, or of the wrong kind. """
    def __init__(self, span, name, reason=_('undefined identifier')):
        self.name = name
        self.reason = reason
        super().__init__(span, f'{reason} {name!r}')


#
# Fuzz harness exception classes.
#
class FuzzSpecError(Exception):
    """ Fuzz specification failed validation. """
    def __init__(self, field, message=_('Invalid fuzz specification value.')):
        self.field = field
        self.message = message
        super().__init__(f'{field}: {message}')
