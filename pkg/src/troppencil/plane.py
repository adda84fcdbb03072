"""Exact affine feasibility in the z = 0 chart of TP^2.

Constraints are affine forms (a, b, c) standing for a*x + b*y + c, with
rational coefficients.  Cells carry equalities (= 0) and inequalities
(>= 0); since TP^2 is two-dimensional and every cell of interest comes
with at least one nontrivial equality, feasible sets are points, segments,
rays or full lines, and we solve them exactly by pairwise intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import primitive, rat


def form(a, b, c) -> tuple:
    return (rat(a), rat(b), rat(c))


def evaluate(f, x, y) -> Fraction:
    return f[0] * x + f[1] * y + f[2]


@dataclass(frozen=True)
class PointGeom:
    x: Fraction
    y: Fraction

    def coords(self):
        return (self.x, self.y)


@dataclass(frozen=True)
class SegmentGeom:
    start: tuple
    end: tuple


@dataclass(frozen=True)
class RayGeom:
    origin: tuple
    direction: tuple  # primitive integer vector


@dataclass(frozen=True)
class LineGeom:
    origin: tuple
    direction: tuple


def solve(eqs, ineqs):
    """Feasible set of {eqs = 0, ineqs >= 0}; None when empty.

    Expects at least one nontrivial equality (true for every fixed-locus
    cell), so the answer is at most one-dimensional.
    """
    live = []
    for f in eqs:
        if f[0] == 0 and f[1] == 0:
            if f[2] != 0:
                return None
            continue
        live.append(f)
    if not live:
        raise ValueError("need at least one nontrivial equality")

    for i in range(len(live)):
        for j in range(i + 1, len(live)):
            a1, b1, c1 = live[i]
            a2, b2, c2 = live[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(b1 * c2 - b2 * c1, det)
            y = Fraction(a2 * c1 - a1 * c2, det)
            if any(evaluate(f, x, y) != 0 for f in live):
                return None
            if any(evaluate(f, x, y) < 0 for f in ineqs):
                return None
            return PointGeom(x, y)

    # all equalities parallel: a common line, or inconsistent
    a, b, c = live[0]
    base = (Fraction(-c, a), Fraction(0)) if b == 0 else (Fraction(0), Fraction(-c, b))
    direction = _canon_direction((-b, a))
    probe = (base[0] + direction[0], base[1] + direction[1])
    for f in live[1:]:
        if evaluate(f, *base) != 0 or evaluate(f, *probe) != 0:
            return None
    return _restrict_line(base, direction, ineqs)


def _canon_direction(d) -> tuple:
    d = primitive(d)
    if d[0] < 0 or (d[0] == 0 and d[1] < 0):
        d = (-d[0], -d[1])
    return d


def _restrict_line(base, direction, ineqs):
    """Intersect the line base + s*direction with halfplanes; classify."""
    lo, hi = None, None  # None = unbounded
    for f in ineqs:
        slope = f[0] * direction[0] + f[1] * direction[1]
        const = evaluate(f, *base)
        if slope == 0:
            if const < 0:
                return None
            continue
        bound = Fraction(-const, slope)
        if slope > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None:
        if lo > hi:
            return None
        if lo == hi:
            return PointGeom(*_at(base, direction, lo))
        return SegmentGeom(_at(base, direction, lo), _at(base, direction, hi))
    if lo is not None:
        return RayGeom(_at(base, direction, lo), direction)
    if hi is not None:
        return RayGeom(_at(base, direction, hi), (-direction[0], -direction[1]))
    return LineGeom(base, direction)


def _at(base, direction, s) -> tuple:
    return (base[0] + s * direction[0], base[1] + s * direction[1])


def canonical_pieces(geoms) -> list:
    """Collapse a list of geometries to disjoint maximal pieces.

    Points swallowed by one-dimensional pieces are dropped; overlapping or
    touching collinear pieces merge.  The output order is deterministic:
    points first (sorted), then one-dimensional pieces by supporting line.
    """
    points = set()
    lines = {}  # (direction, offset) -> list of (lo, hi) in the s = D.X parameter
    for g in geoms:
        if g is None:
            continue
        if isinstance(g, PointGeom):
            points.add((g.x, g.y))
            continue
        if isinstance(g, SegmentGeom):
            d = _canon_direction(
                (g.end[0] - g.start[0], g.end[1] - g.start[1])
            )
            key = _line_key(g.start, d)
            s1, s2 = sorted((_param(d, g.start), _param(d, g.end)))
            lines.setdefault(key, []).append((s1, s2))
        elif isinstance(g, RayGeom):
            d = _canon_direction(g.direction)
            key = _line_key(g.origin, d)
            s0 = _param(d, g.origin)
            if g.direction == d:
                lines.setdefault(key, []).append((s0, None))
            else:
                lines.setdefault(key, []).append((None, s0))
        elif isinstance(g, LineGeom):
            d = _canon_direction(g.direction)
            lines.setdefault(key := _line_key(g.origin, d), []).append((None, None))
        else:
            raise TypeError(f"unknown geometry {g!r}")

    out = []
    line_pieces = []
    for (d, offset), intervals in sorted(lines.items()):
        merged = _merge_intervals(intervals)
        foot = _foot(d, offset)
        for lo, hi in merged:
            if lo is None and hi is None:
                line_pieces.append(LineGeom(foot, d))
            elif lo is None:
                line_pieces.append(RayGeom(_from_param(foot, d, hi), (-d[0], -d[1])))
            elif hi is None:
                line_pieces.append(RayGeom(_from_param(foot, d, lo), d))
            elif lo == hi:
                points.add(_from_param(foot, d, lo))
            else:
                line_pieces.append(
                    SegmentGeom(_from_param(foot, d, lo), _from_param(foot, d, hi))
                )
        # absorb points sitting on a merged piece of this line
        for pt in list(points):
            if -d[1] * pt[0] + d[0] * pt[1] != offset:
                continue
            s = _param(d, pt)
            for lo, hi in merged:
                if (lo is None or lo <= s) and (hi is None or s <= hi) and lo != hi:
                    points.discard(pt)
                    break
    out.extend(PointGeom(x, y) for x, y in sorted(points))
    out.extend(line_pieces)
    return out


def _line_key(point, d) -> tuple:
    # normal (-d1, d0); the offset pins the supporting line
    return (d, -d[1] * point[0] + d[0] * point[1])


def _param(d, point) -> Fraction:
    return d[0] * point[0] + d[1] * point[1]


def _foot(d, offset) -> tuple:
    n = (-d[1], d[0])
    nn = n[0] * n[0] + n[1] * n[1]
    return (Fraction(offset * n[0], nn), Fraction(offset * n[1], nn))


def _from_param(foot, d, s) -> tuple:
    dd = d[0] * d[0] + d[1] * d[1]
    u = Fraction(s - _param(d, foot), dd)
    return (foot[0] + u * d[0], foot[1] + u * d[1])


def _merge_intervals(intervals) -> list:
    """Union of closed (possibly unbounded) parameter intervals."""

    def key(iv):
        lo, _ = iv
        return (0, 0) if lo is None else (1, lo)

    merged = []
    for lo, hi in sorted(intervals, key=key):
        if merged:
            plo, phi = merged[-1]
            if phi is None or lo is None or lo <= phi:
                nhi = None if (phi is None or hi is None) else max(phi, hi)
                merged[-1] = (plo, nhi)
                continue
        merged.append((lo, hi))
    return merged
