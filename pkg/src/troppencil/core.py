"""Exact rational primitives shared by every other module.

All scalars are `fractions.Fraction` (arbitrary precision, always in lowest
terms, positive denominator).  Nothing in this package ever touches floating
point: the geometric predicates below are tie-detections, which are
meaningless under rounding.

Index conventions: support points and tree leaves are numbered 1..n
throughout, matching the usual mathematical labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class TropError(Exception):
    """Base class for domain errors raised by this package."""


Rational = Fraction


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/4' and Fractions to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class ProjPoint:
    """A point of TP^(m-1): a rational vector modulo the all-ones vector.

    The canonical representative is chosen by subtracting the last
    coordinate, so `coords[-1] == 0` always holds.  Two points are equal
    iff their canonical representatives agree componentwise.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        cs = tuple(rat(c) for c in coords)
        if len(cs) < 2:
            raise ValueError("projective point needs at least 2 coordinates")
        last = cs[-1]
        self.coords = tuple(c - last for c in cs)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "ProjPoint(%s)" % (", ".join(str(c) for c in self.coords))


@dataclass(frozen=True)
class SupportSet:
    """An exponent set {a_1, ..., a_n} of triples (r, s, t) with r+s+t = d.

    The triples are distinct, the degree is shared, and the (r, s)
    projections span a two-dimensional convex hull; in particular n >= 3.
    All geometric reasoning happens in the (r, s) plane since t = d - r - s.
    """

    degree: int
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(int(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if len(pts) < 3:
            raise ValueError("support set needs at least 3 points")
        seen = set()
        for p in pts:
            if len(p) != 3 or any(c < 0 for c in p):
                raise ValueError(f"bad support point {p}")
            if sum(p) != self.degree:
                raise ValueError(f"point {p} does not have degree {self.degree}")
            if p in seen:
                raise ValueError(f"duplicate support point {p}")
            seen.add(p)
        if not _spans_plane([(p[0], p[1]) for p in pts]):
            raise ValueError("support set is not two-dimensional")

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, i: int) -> tuple:
        """The triple a_i, 1-based."""
        return self.points[i - 1]

    def rs(self, i: int) -> tuple:
        """The (r, s) projection of a_i, 1-based."""
        p = self.points[i - 1]
        return (p[0], p[1])

    def indices(self) -> range:
        return range(1, self.n + 1)

    @classmethod
    def from_rs(cls, degree: int, rs_points: Iterable) -> "SupportSet":
        """Build from (r, s) pairs, filling in t = d - r - s."""
        pts = []
        for r, s in rs_points:
            t = degree - r - s
            if t < 0:
                raise ValueError(f"(r, s) = {(r, s)} exceeds degree {degree}")
            pts.append((r, s, t))
        return cls(degree, tuple(pts))


@dataclass(frozen=True)
class MinProfile:
    """Exact minimum of a term list together with all attaining indices."""

    value: Fraction
    argmin: frozenset

    @property
    def multiplicity(self) -> int:
        return len(self.argmin)


def min_profile(values: Sequence) -> MinProfile:
    """Minimum of a nonempty list of rationals and its 1-based argmin set."""
    vals = [rat(v) for v in values]
    if not vals:
        raise ValueError("empty term list")
    m = min(vals)
    return MinProfile(m, frozenset(i + 1 for i, v in enumerate(vals) if v == m))


def orient2d(p, q, r) -> int:
    """Sign of det(q - p, r - p); 0 iff the three points are collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def dot(a, P: ProjPoint) -> Fraction:
    """r*x + s*y + t*z for a support point a = (r, s, t) and P in TP^2."""
    x, y, z = P.coords
    return a[0] * x + a[1] * y + a[2] * z


def support_values(A: SupportSet, c: ProjPoint, P: ProjPoint) -> list:
    """The term list (c_i + a_i . P)_{i=1..n}."""
    if c.dim != A.n:
        raise ValueError(f"coefficient vector has {c.dim} entries, support has {A.n}")
    return [c[i - 1] + dot(A.point(i), P) for i in A.indices()]


def _spans_plane(pts) -> bool:
    p0 = pts[0]
    for i in range(1, len(pts)):
        for j in range(i + 1, len(pts)):
            if orient2d(p0, pts[i], pts[j]) != 0:
                return True
    return False


def primitive(vec) -> tuple:
    """Scale an integer vector to a primitive one (gcd of entries is 1)."""
    from math import gcd

    g = 0
    for v in vec:
        g = gcd(g, abs(int(v)))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(int(v) // g for v in vec)


def rational_to_json(x: Fraction):
    x = rat(x)
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_json(obj) -> Fraction:
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise ValueError(f"malformed rational: {obj!r}")
    try:
        return Fraction(obj)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"malformed rational: {obj!r}") from e
