class ApolloniusError(Exception):
    pass


class CoincidentObjects(ApolloniusError, ValueError):
    """Two objects of a configuration are the same unoriented circle/point/line."""


# the oriented-circle layer calls them circles
CoincidentCircles = CoincidentObjects


class CenterIncident(ApolloniusError, ValueError):
    """An object passes through the center of an inversion."""


class TripleTangentAtPoint(ApolloniusError, ValueError):
    """Three oriented circles are pairwise tangent at one common point."""


class NumericalInstability(ApolloniusError, ArithmeticError):
    """The float oracle met a near-tie it refuses to decide."""


class InternalInconsistency(ApolloniusError, AssertionError):
    """Two exact computations that must agree did not."""


class ParseError(ApolloniusError, ValueError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
