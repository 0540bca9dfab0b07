"""Independent construction of the solution set by brute algebra.

For every choice of tangency signs the conditions
``|X - x_i| = rho + s_i r_i`` reduce, after subtracting pairs, to two linear
equations in ``(x, y, rho)`` and one quadratic along the kernel line. Common
tangent lines come from ``n . x_i - d = s_i r_i`` with ``|n| = 1``, and double
points are injected from the exact classifier. Nothing here looks at
discriminants of oriented triples.

In exact mode the linear algebra and the quadratic discriminants are computed
with rationals, so the number of real roots is exact; roots are converted to
floats only for output and for the residual gate. In float mode near-ties
raise :class:`NumericalInstability` instead of being decided.
"""

from __future__ import annotations

import math
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ._numeric import Scalar, get_tolerance, is_exact, sign, surd_sign, to_mode
from .classify import INFINITE, double_points, topo_signature
from .errors import InternalInconsistency, NumericalInstability
from .inversion import normalize_lines, pull_back
from .objects import Circle, DegeneratePoint, Line, Point, PointAtInfinity

RESIDUAL_GATE = 1e-9
DEDUP_TOL = 1e-6

# float mode only: "refuse" raises on near-ties, "band" settles them like the
# float count engine does (anything inside the tolerance band is a tie)
_TIES: ContextVar[str] = ContextVar("ties", default="refuse")


def _refuse(message: str) -> None:
    if _TIES.get() == "refuse":
        raise NumericalInstability(message)


@dataclass(frozen=True)
class SolutionSet:
    solutions: tuple = ()
    infinite: bool = False

    @property
    def count(self):
        return INFINITE if self.infinite else len(self.solutions)


# --- frame handling -----------------------------------------------------------


@dataclass(frozen=True)
class _Frame:
    """Translate by ``origin`` and divide by ``scale`` to get unit-size data."""

    ox: Scalar
    oy: Scalar
    scale: Scalar

    def to_unit(self, obj):
        s = self.scale
        if isinstance(obj, Point):
            return Point((obj.x - self.ox) / s, (obj.y - self.oy) / s)
        return Circle((obj.cx - self.ox) / s, (obj.cy - self.oy) / s, obj.radius / s)

    def from_unit(self, sol):
        s, ox, oy = float(self.scale), float(self.ox), float(self.oy)
        if isinstance(sol, Circle):
            return Circle(sol.cx * s + ox, sol.cy * s + oy, sol.radius * s)
        if isinstance(sol, Line):
            return Line(sol.nx, sol.ny, sol.d * s + sol.nx * ox + sol.ny * oy)
        if isinstance(sol, DegeneratePoint):
            return DegeneratePoint(sol.x * s + ox, sol.y * s + oy)
        return sol


def _frame(objs) -> _Frame:
    xs = [o.center[0] for o in objs]
    ys = [o.center[1] for o in objs]
    ox, oy = sum(xs) / 3, sum(ys) / 3
    scale = max(
        max(abs(x - ox) for x in xs),
        max(abs(y - oy) for y in ys),
        max(o.radius for o in objs),
    )
    if scale == 0:
        scale = 1
    return _Frame(ox, oy, scale)


def _params(objs, exact: bool):
    out = []
    for o in objs:
        x, y = o.center
        out.append((to_mode(x, exact), to_mode(y, exact), to_mode(o.radius, exact)))
    return out


def _sign_patterns(objs):
    """All sign choices, with the sign fixed for radius-zero objects."""
    choices = [(1,) if isinstance(o, Point) else (1, -1) for o in objs]
    return list(product(*choices))


# --- quadratic root bookkeeping ---------------------------------------------------


def _roots(A, B, C, exact: bool, scale_b2: float):
    """Real roots of ``A l^2 + 2 B l + C = 0`` as ``(a, b, m)`` meaning ``a + b sqrt(m)``.

    Returns None when the equation vanishes identically.
    """
    tol = get_tolerance()
    if exact:
        if A == 0:
            if B == 0:
                return None if C == 0 else []
            return [(-C / (2 * B), 0, 0)]
        disc = B * B - A * C
        if disc < 0:
            return []
        if disc == 0:
            return [(-B / A, 0, 0)]
        return [(-B / A, 1 / A, disc), (-B / A, -1 / A, disc)]
    if abs(A) <= tol * scale_b2:
        if A != 0.0:
            _refuse("solution direction is nearly null")
        if B == 0.0:
            return None if C == 0.0 else []
        return [(-C / (2 * B), 0.0, 0.0)]
    disc = B * B - A * C
    if abs(disc) <= tol * (B * B + abs(A * C)):
        _refuse("quadratic has a near-double root")
        return [(-B / A, 0.0, 0.0)]
    if disc < 0:
        return []
    root = math.sqrt(disc)
    return [((-B + root) / A, 0.0, 0.0), ((-B - root) / A, 0.0, 0.0)]


def _surd_float(a, b, m) -> float:
    if not b or not m:
        return float(a)
    root = math.sqrt(float(m))
    if isinstance(a, Fraction) and a and (a > 0) != (b > 0):
        # a and b sqrt(m) cancel: use (a^2 - b^2 m) / (a - b sqrt(m)) instead
        den = float(a) - float(b) * root
        return float((a * a - b * b * m) / Fraction(den))
    return float(a) + float(b) * root


def _coord(base, lam, w):
    """``base + lam * w`` with ``lam = (a, b, m)``: returns the (a, b, m) of the result."""
    a, b, m = lam
    return (base + a * w, b * w, m)


def _surd_sign3(v, exact: bool, scale: float) -> int:
    a, b, m = v
    if exact:
        return surd_sign(a, b, m)
    return sign(_surd_float(a, b, m), scale)


# --- circles -----------------------------------------------------------------


def _circle_roots(params, signs, exact: bool):
    """Raw solutions ``(x, y, rho)`` of one sign system as surd triples."""
    (x1, y1, r1), (x2, y2, r2), (x3, y3, r3) = params
    t1, t2, t3 = signs[0] * r1, signs[1] * r2, signs[2] * r3
    rows = []
    for xi, yi, ti in ((x2, y2, t2), (x3, y3, t3)):
        coef = (2 * (xi - x1), 2 * (yi - y1), 2 * (ti - t1))
        rhs = (xi * xi + yi * yi - ti * ti) - (x1 * x1 + y1 * y1 - t1 * t1)
        rows.append((coef, rhs))
    (p, h1), (q, h2) = rows
    w = (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])
    wn = sum(abs(c) for c in w)
    pn = sum(abs(c) for c in p) * sum(abs(c) for c in q)
    if exact:
        if wn == 0:
            return []  # the three null cones meet only at infinity
    elif wn <= get_tolerance() * pn:
        if wn != 0.0:
            _refuse("linear system is nearly rank deficient")
        return []
    # particular solution with the free variable set to zero
    j = max(range(3), key=lambda n: abs(w[n]))
    a_, b_ = [n for n in range(3) if n != j]
    det = p[a_] * q[b_] - p[b_] * q[a_]  # equals +-w[j]
    u0 = [0 * h1] * 3
    u0[a_] = (h1 * q[b_] - h2 * p[b_]) / det
    u0[b_] = (p[a_] * h2 - q[a_] * h1) / det
    v0 = (u0[0] - x1, u0[1] - y1, u0[2] + t1)
    A = w[0] * w[0] + w[1] * w[1] - w[2] * w[2]
    B = w[0] * v0[0] + w[1] * v0[1] - w[2] * v0[2]
    C = v0[0] * v0[0] + v0[1] * v0[1] - v0[2] * v0[2]
    wsq = w[0] * w[0] + w[1] * w[1] + w[2] * w[2]
    roots = _roots(A, B, C, exact, float(wsq))
    if roots is None:
        raise InternalInconsistency("a sign system has a whole line of solutions")
    return [tuple(_coord(u0[n], lam, w[n]) for n in range(3)) for lam in roots]


def solve_sign_system(objects, signs, exact: bool | None = None) -> list:
    """Circles tangent to the three (line-free) objects with
    ``|X - x_i| = rho + s_i r_i``.

    Radius-zero roots are returned as :class:`DegeneratePoint`. Coordinates
    are returned in the frame of ``objects``.
    """
    objs = list(objects)
    if exact is None:
        exact = all(is_exact(*o.center, o.radius) for o in objs)
    frame = _frame(objs)
    unit = [frame.to_unit(o) for o in objs]
    return [frame.from_unit(s) for s, _ in _solve_unit(unit, signs, exact)]


def _solve_unit(unit, signs, exact: bool):
    out = []
    for x, y, rho in _circle_roots(_params(unit, exact), signs, exact):
        s = _surd_sign3(rho, exact, 1.0)
        if s < 0:
            continue
        fx, fy, frho = (_surd_float(*x), _surd_float(*y), _surd_float(*rho))
        if s == 0:
            out.append((DegeneratePoint(fx, fy), (x, y)))
        else:
            out.append((Circle(fx, fy, frho), None))
    return out


# --- lines -------------------------------------------------------------------


def _lines_for_offsets(centers, offsets, exact: bool) -> list[tuple[float, float, float]]:
    """Unit normals ``n`` and offsets ``d`` with ``n . x_i - d = offset_i`` for all i."""
    (x1, y1) = centers[0]
    t1 = offsets[0]
    tol = get_tolerance()
    eqs = [((xi - x1, yi - y1), ti - t1) for (xi, yi), ti in zip(centers[1:], offsets[1:])]
    (e2, tau2), = eqs[:1]
    normals = []
    if len(eqs) == 2:
        (e3, tau3) = eqs[1]
        det = e2[0] * e3[1] - e2[1] * e3[0]
        scale = (abs(e2[0]) + abs(e2[1])) * (abs(e3[0]) + abs(e3[1]))
        singular = det == 0 if exact else abs(det) <= tol * scale
        if not singular:
            nx = (tau2 * e3[1] - tau3 * e2[1]) / det
            ny = (e2[0] * tau3 - e3[0] * tau2) / det
            n2 = nx * nx + ny * ny
            s = sign(n2 - 1) if exact else (0 if abs(n2 - 1) <= tol else (1 if n2 > 1 else -1))
            if s == 0 and not exact and n2 != 1.0:
                _refuse("tangent line is a near-tie")
            if s == 0:
                normals.append((float(nx), float(ny)))
            return [(nx_, ny_, nx_ * float(x1) + ny_ * float(y1) - float(t1)) for nx_, ny_ in normals]
        if not exact and det != 0:
            _refuse("tangent-line system is nearly singular")
        # collinear centers: both equations must describe the same constraint
        base, tau = (e2, tau2) if (e2[0] or e2[1]) else (e3, tau3)
        other, otau = (e3, tau3) if base is e2 else (e2, tau2)
        be = base[0] * base[0] + base[1] * base[1]
        if be == 0:
            return []
        mu = (other[0] * base[0] + other[1] * base[1]) / be
        consistent = sign(otau - mu * tau, abs(otau) + abs(mu * tau) + 1) == 0
        if not consistent:
            return []
    else:
        base, tau = e2, tau2
        be = base[0] * base[0] + base[1] * base[1]
        if be == 0:
            return []
    # n = (tau / |e|^2) e + lam e_perp with |n| = 1
    lam2 = (1 - tau * tau / be) / be
    s = sign(lam2, 1 / be)
    if s < 0:
        return []
    lams = [0.0] if s == 0 else [math.sqrt(float(lam2)), -math.sqrt(float(lam2))]
    ex, ey = float(base[0]), float(base[1])
    c = float(tau / be)
    res = []
    for lam in lams:
        nx, ny = c * ex - lam * ey, c * ey + lam * ex
        res.append((nx, ny, nx * float(x1) + ny * float(y1) - float(t1)))
    return res


def _unit_lines(unit, exact: bool) -> list[Line]:
    """Common tangent lines over all sign patterns.

    In exact mode every line is produced once: the sign of the first circle
    is fixed, which picks one of the two normals of each line, and with
    three points the two roots are the same line.
    """
    params = _params(unit, exact)
    centers = [(x, y) for x, y, _ in params]
    patterns = _sign_patterns(unit)
    anchor = next((i for i, o in enumerate(unit) if isinstance(o, Circle)), None)
    if exact and anchor is not None:
        patterns = [p for p in patterns if p[anchor] == 1]
    lines = []
    for signs in patterns:
        offsets = [s * r for s, (_, _, r) in zip(signs, params)]
        found = _lines_for_offsets(centers, offsets, exact)
        if exact and anchor is None:
            found = found[:1]
        lines.extend(Line(nx, ny, d) for nx, ny, d in found)
    return lines


def common_tangent_lines(objects, exact: bool | None = None) -> list[Line]:
    """Lines tangent to all three line-free objects (through them, for points)."""
    objs = list(objects)
    if exact is None:
        exact = all(is_exact(*o.center, o.radius) for o in objs)
    frame = _frame(objs)
    unit = [frame.to_unit(o) for o in objs]
    lines = _unit_lines(unit, exact)
    return [frame.from_unit(s) for s in (lines if exact else _dedup(lines))]


def oriented_common_tangents(c1, c2) -> list[Line]:
    """Oriented lines tangent to both oriented circles with matching orientation.

    With ``n`` the right-hand normal of the line direction, an oriented circle
    of signed radius r touches the oriented line compatibly when
    ``n . center - d = -r``.
    """
    exact = is_exact(c1.cx, c1.cy, c1.r, c2.cx, c2.cy, c2.r)
    centers = [(to_mode(c1.cx, exact), to_mode(c1.cy, exact)),
               (to_mode(c2.cx, exact), to_mode(c2.cy, exact))]
    offsets = [-to_mode(c1.r, exact), -to_mode(c2.r, exact)]
    out = []
    for nx, ny, d in _lines_for_offsets(centers, offsets, exact):
        if not any(abs(nx - l.nx) <= DEDUP_TOL and abs(ny - l.ny) <= DEDUP_TOL for l in out):
            out.append(Line(nx, ny, d))
    return out


# --- residuals, dedup, assembly ------------------------------------------------


def _dist(ax, ay, bx, by) -> float:
    return math.hypot(float(ax) - float(bx), float(ay) - float(by))


def residual(s, obj) -> float:
    """Distance from tangency; 0 means ``s`` touches ``obj``."""
    if isinstance(s, PointAtInfinity):
        return 0.0 if isinstance(obj, Line) else math.inf
    if isinstance(obj, Line):
        if isinstance(s, Circle):
            return abs(abs(float(obj.offset(s.cx, s.cy))) - float(s.radius))
        if isinstance(s, Line):
            return abs(float(s.nx) * float(obj.ny) - float(s.ny) * float(obj.nx))
        return abs(float(obj.offset(s.x, s.y)))
    (ox, oy), r = obj.center, float(obj.radius)
    if isinstance(s, Circle):
        d = _dist(s.cx, s.cy, ox, oy)
        rho = float(s.radius)
        return min(abs(d - (rho + r)), abs(d - abs(rho - r)))
    if isinstance(s, Line):
        return abs(abs(float(s.offset(ox, oy))) - r)
    return abs(_dist(s.x, s.y, ox, oy) - r)


def _key(s):
    if isinstance(s, Circle):
        return (0, float(s.cx), float(s.cy), float(s.radius))
    if isinstance(s, Line):
        c = s.canonical()
        return (1, float(c.nx), float(c.ny), float(c.d))
    if isinstance(s, DegeneratePoint):
        return (2, float(s.x), float(s.y), 0.0)
    return (3, 0.0, 0.0, 0.0)


def _dedup(sols):
    out = []
    for s in sorted(sols, key=_key):
        k = _key(s)
        if any(k[0] == o[0] and all(abs(a - b) <= DEDUP_TOL for a, b in zip(k[1:], o[1:]))
               for o in map(_key, out)):
            continue
        out.append(s)
    return out


def dedup(sols) -> list:
    """Drop solutions within the dedup tolerance of an earlier one; sorted output."""
    return _dedup(sols)


def _near_degenerate(objs) -> bool:
    """Float preview of the exact predicates: is any of them within the zero band?"""
    tol = get_tolerance()
    vals = [(float(o.center[0]), float(o.center[1]), float(o.radius)) for o in objs]
    for i in range(3):
        for j in range(i + 1, 3):
            (xa, ya, ra), (xb, yb, rb) = vals[i], vals[j]
            d2 = (xa - xb) ** 2 + (ya - yb) ** 2
            for rr in ((ra + rb) ** 2, (ra - rb) ** 2):
                if abs(d2 - rr) <= tol * (d2 + rr):
                    return True
    # a point nearly common to all three objects
    with_float = [Circle(x, y, r) if r > 0 else Point(x, y) for x, y, r in vals]
    try:
        from ._numeric import tolerance

        with tolerance(max(tol, 1e-7)):
            k, _ = double_points(with_float)
    except ZeroDivisionError:
        return True
    return k > 0


def _magnitude(sol) -> float:
    if isinstance(sol, Circle):
        return max(abs(float(sol.cx)), abs(float(sol.cy)), float(sol.radius))
    return 0.0


def _check_residuals(sol, unit, exact: bool):
    # relative to the solution's own size: a near-line circle of radius 1e13
    # cannot be checked to 1e-9 absolute in floats
    worst = max(residual(sol, o) for o in unit) / max(1.0, _magnitude(sol))
    if worst > RESIDUAL_GATE:
        if exact:
            raise InternalInconsistency(f"exact root {sol} has residual {worst:.3g}")
        raise NumericalInstability(f"spurious root {sol} (residual {worst:.3g})")


def solve(config, mode: str = "exact", ties: str = "refuse") -> SolutionSet:
    """All solutions of the configuration, in its own frame.

    Lines are first inverted away and the solutions mapped back. ``ties``
    matters in float mode only: ``"refuse"`` raises NumericalInstability on
    anything inside the tolerance band, ``"band"`` treats it as an exact tie.
    """
    if ties not in ("refuse", "band"):
        raise ValueError(f"unknown tie policy {ties!r}")
    token = _TIES.set(ties)
    try:
        return _solve(list(config), mode)
    finally:
        _TIES.reset(token)


def _solve(objs: list, mode: str) -> SolutionSet:
    if any(isinstance(o, Line) for o in objs):
        normalized, record = normalize_lines(objs)
        inner = _solve(normalized, mode)
        back = (pull_back(record, s) for s in inner.solutions)
        return SolutionSet(tuple(sorted(back, key=_key)), inner.infinite)
    exact = mode == "exact"
    if exact and not all(is_exact(*o.center, o.radius) for o in objs):
        objs = [_exactify(o) for o in objs]
    if not exact and _near_degenerate(objs):
        _refuse("configuration is within the tie band; use exact mode")
    if topo_signature(objs).triple_tangent_at_common_point:
        return SolutionSet((), infinite=True)
    frame = _frame(objs)
    unit = [frame.to_unit(o) for o in objs]
    k, dpts = double_points(objs)
    found = []
    for signs in _sign_patterns(unit):
        for sol, exact_xy in _solve_unit(unit, signs, exact):
            if isinstance(sol, DegeneratePoint):
                if exact:
                    _check_degenerate(sol, dpts, frame)
                continue
            _check_residuals(sol, unit, exact)
            if not exact and float(sol.radius) <= 1e-7:
                _refuse("solution radius is nearly zero")
                continue  # a double point, injected below
            found.append(sol)
    for line in _unit_lines(unit, exact):
        _check_residuals(line, unit, exact)
        found.append(line)
    if not exact:
        # exact roots of distinct sign systems never coincide for rho > 0;
        # only float noise needs merging
        found = _dedup(found)
    sols = [frame.from_unit(s) for s in found]
    sols += [DegeneratePoint(float(x), float(y)) for x, y in dpts]
    return SolutionSet(tuple(sorted(sols, key=_key)))


def _check_degenerate(sol: DegeneratePoint, dpts, frame: _Frame):
    back = frame.from_unit(sol)
    if not any(_dist(back.x, back.y, x, y) <= 1e-6 * float(frame.scale) for x, y in dpts):
        raise InternalInconsistency(f"radius-zero root {back} is not a double point")


def _exactify(o):
    if isinstance(o, Point):
        return Point(Fraction(o.x), Fraction(o.y))
    return Circle(Fraction(o.cx), Fraction(o.cy), Fraction(o.radius))


def count_oracle(config, mode: str = "exact", ties: str = "refuse"):
    """Number of solutions, or INFINITE."""
    return solve(config, mode, ties).count
