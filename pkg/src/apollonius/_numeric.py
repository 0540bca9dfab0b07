"""Scalar handling shared by every module.

Exact mode uses :class:`fractions.Fraction` throughout, so every sign
decision is error-free. Float mode uses plain ``float`` and treats a value
as zero when it is within ``tol * scale`` of zero.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
import re
from fractions import Fraction
from typing import Iterator, Union

Scalar = Union[Fraction, float, int]

DEFAULT_TOL = 1e-9

_tol: contextvars.ContextVar[float] = contextvars.ContextVar("tol", default=DEFAULT_TOL)

_RATIONAL_RE = re.compile(r"^[+-]?\d+/\d+$")
_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


def get_tolerance() -> float:
    return _tol.get()


@contextlib.contextmanager
def tolerance(tol: float) -> Iterator[None]:
    """Temporarily change the relative zero band used in float mode."""
    token = _tol.set(tol)
    try:
        yield
    finally:
        _tol.reset(token)


def is_exact(*values: Scalar) -> bool:
    return all(isinstance(v, (Fraction, int)) for v in values)


def sign(value: Scalar, scale: Scalar = 1) -> int:
    """Return -1, 0 or +1.

    ``scale`` is the magnitude of the terms that produced ``value``; it only
    matters for floats, where ``|value| <= tol * scale`` counts as zero.
    """
    if isinstance(value, float):
        band = _tol.get() * max(abs(float(scale)), 1e-300)
        if abs(value) <= band:
            return 0
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def parse_scalar(text: str | int | float, exact: bool = True) -> Scalar:
    """Parse ``"p/q"`` or a decimal string.

    Raises ValueError on malformed input.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a number: {text!r}")
    if isinstance(text, int):
        return Fraction(text) if exact else float(text)
    if isinstance(text, float):
        if not math.isfinite(text):
            raise ValueError(f"not a finite number: {text!r}")
        return Fraction(text) if exact else text
    s = str(text)
    if _RATIONAL_RE.match(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {s!r}")
        value = Fraction(int(num), int(den))
    elif _DECIMAL_RE.match(s):
        value = Fraction(s)
    else:
        raise ValueError(f"not a rational or decimal literal: {s!r}")
    return value if exact else float(value)


def to_mode(value: Scalar, exact: bool) -> Scalar:
    if exact:
        return value if isinstance(value, Fraction) else Fraction(value)
    return float(value)


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational when it is rational, else None."""
    if value < 0:
        return None
    value = Fraction(value)
    n, d = value.numerator, value.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt(value: Scalar) -> Scalar:
    """Square root that stays exact when possible, else falls back to float."""
    if isinstance(value, (Fraction, int)):
        root = exact_sqrt(Fraction(value))
        if root is not None:
            return root
    return math.sqrt(max(float(value), 0.0))


def surd_sign(a: Scalar, b: Scalar, m: Scalar) -> int:
    """Exact sign of ``a + b*sqrt(m)`` for rationals a, b and m >= 0."""
    sa = sign(a)
    sb = sign(b) if m != 0 else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 m
    diff = a * a - b * b * m
    return sa * sign(diff)
