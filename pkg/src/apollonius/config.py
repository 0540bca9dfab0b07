"""Configuration files: a JSON document with exactly three objects.

    {"mode": "exact",
     "objects": [{"type": "circle", "cx": "0", "cy": "0", "r": "1/3"},
                 {"type": "point", "x": "2", "y": "0.5"},
                 {"type": "line", "nx": "0", "ny": "1", "d": "-2"}]}

Numbers are ``"p/q"`` or decimal strings (bare JSON numbers are accepted
and parsed from their literal text, so ``0.1`` is exactly 1/10).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ._numeric import parse_scalar
from .errors import CoincidentObjects, ParseError
from .objects import Circle, Line, Point, object_to_dict, same_object

_FIELDS = {"circle": ("cx", "cy", "r"), "point": ("x", "y"), "line": ("nx", "ny", "d")}


@dataclass(frozen=True)
class ConfigFile:
    objects: tuple
    mode: str = "exact"

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def to_dict(self) -> dict:
        return {"mode": self.mode, "objects": [object_to_dict(o) for o in self.objects]}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _line_of(text: str, needle: str) -> int | None:
    for n, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return n
    return None


def parse_config(text: str, mode: str | None = None) -> ConfigFile:
    """Parse and validate a configuration document.

    ``mode`` overrides the document's own ``mode`` entry.
    """
    try:
        doc = json.loads(text, parse_float=str, parse_int=str)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    mode = mode or doc.get("mode", "exact")
    if mode not in ("exact", "float"):
        raise ParseError(f"unknown mode {mode!r}", field="mode")
    exact = mode == "exact"
    raw = doc.get("objects")
    if not isinstance(raw, list):
        raise ParseError("missing list 'objects'", field="objects")
    if len(raw) != 3:
        raise ParseError(f"expected exactly 3 objects, got {len(raw)}", field="objects")
    objects = []
    for i, entry in enumerate(raw):
        where = f"objects[{i}]"
        if not isinstance(entry, dict):
            raise ParseError("object must be a mapping", field=where)
        kind = entry.get("type")
        if kind not in _FIELDS:
            raise ParseError(f"unknown type {kind!r}", field=f"{where}.type")
        vals = []
        for name in _FIELDS[kind]:
            if name not in entry:
                raise ParseError("missing value", field=f"{where}.{name}")
            try:
                vals.append(parse_scalar(entry[name], exact))
            except ValueError as e:
                raise ParseError(
                    str(e), field=f"{where}.{name}", line=_line_of(text, str(entry[name]))
                ) from None
        try:
            if kind == "circle":
                objects.append(Circle(*vals))
            elif kind == "point":
                objects.append(Point(*vals))
            else:
                objects.append(Line.from_normal(*vals))
        except ValueError as e:
            raise ParseError(str(e), field=where) from None
    for i in range(3):
        for j in range(i + 1, 3):
            if same_object(objects[i], objects[j]):
                raise CoincidentObjects(f"objects[{i}] and objects[{j}] coincide")
    return ConfigFile(tuple(objects), mode)


def load_config(path, mode: str | None = None) -> ConfigFile:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read(), mode)
