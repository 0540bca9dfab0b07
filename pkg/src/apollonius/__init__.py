"""Counting, classifying and constructing solutions of the Apollonius problem."""

from .classify import INFINITE, IMPOSSIBLE, expected_count, topo_signature
from .config import ConfigFile, load_config, parse_config
from .core import OrientedCircle, pair_relation, power, tangent_count_oriented
from .count import CountResult, apollonius_count
from .errors import (
    ApolloniusError,
    CoincidentCircles,
    CoincidentObjects,
    NumericalInstability,
    ParseError,
)
from .inversion import Inversion, invert_object, normalize_lines, pull_back
from .objects import Circle, DegeneratePoint, Line, Point, PointAtInfinity
from .oracle import SolutionSet, count_oracle, solve

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "IMPOSSIBLE",
    "ApolloniusError",
    "Circle",
    "CoincidentCircles",
    "CoincidentObjects",
    "ConfigFile",
    "CountResult",
    "DegeneratePoint",
    "Inversion",
    "Line",
    "NumericalInstability",
    "OrientedCircle",
    "ParseError",
    "Point",
    "PointAtInfinity",
    "SolutionSet",
    "apollonius_count",
    "count_oracle",
    "expected_count",
    "invert_object",
    "load_config",
    "normalize_lines",
    "pair_relation",
    "parse_config",
    "power",
    "pull_back",
    "solve",
    "tangent_count_oriented",
    "topo_signature",
]
