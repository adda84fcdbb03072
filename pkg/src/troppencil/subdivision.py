"""Regular subdivisions from lower-hull lifting, and their dual plane curves.

A coefficient vector c lifts the support points (r_i, s_i) to heights c_i;
the projected lower faces of the lifted hull form the regular subdivision.
The dual curve has one vertex per 2-cell (at the point where the cell's
terms tie for the minimum), one bounded edge per interior 1-face and one
ray per boundary 1-face.

The lower hull is found by exhaustive facet-candidate testing: every
non-collinear support triple determines a plane, kept when every lift lies
on or above it.  O(n^4) worst case, which is fine at the scale this
library targets (n <= ~12), and trivially exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    ProjPoint,
    SupportSet,
    TropError,
    dot,
    min_profile,
    orient2d,
    primitive,
    support_values,
)


@dataclass(frozen=True)
class RegularSubdivision:
    """Cells of the lower-hull subdivision, each the full set of support
    indices lying on that face (hull vertices and any collinear boundary
    points).  Cells are sorted lexicographically by their index tuples."""

    support: SupportSet
    cells: tuple  # tuple of sorted index tuples, 1-based

    @property
    def used(self) -> frozenset:
        return frozenset(i for cell in self.cells for i in cell)

    def __eq__(self, other):
        return (
            isinstance(other, RegularSubdivision)
            and self.support == other.support
            and self.cells == other.cells
        )

    def __hash__(self):
        return hash((self.support, self.cells))


@dataclass(frozen=True)
class CurveVertex:
    point: ProjPoint
    cell: tuple  # dual 2-cell, 1-based indices


@dataclass(frozen=True)
class CurveEdge:
    a: int  # vertex index into CurveGraph.vertices
    b: int
    dual: tuple  # support indices on the dual interior 1-face


@dataclass(frozen=True)
class CurveRay:
    vertex: int
    direction: tuple  # primitive integer direction in the z = 0 chart
    dual: tuple  # support indices on the dual boundary 1-face


@dataclass(frozen=True)
class CurveGraph:
    """Embedded dual graph of a regular subdivision."""

    subdivision: RegularSubdivision
    vertices: tuple
    edges: tuple
    rays: tuple


def _cell_plane(A: SupportSet, c: ProjPoint, cell) -> tuple:
    """Coefficients (alpha, beta, gamma) of the lift plane h = alpha*r + beta*s + gamma."""
    pts = [A.rs(i) for i in cell[:3]]
    hs = [c[i - 1] for i in cell[:3]]
    (r1, s1), (r2, s2), (r3, s3) = pts
    det = (r2 - r1) * (s3 - s1) - (s2 - s1) * (r3 - r1)
    if det == 0:
        raise TropError("degenerate cell")
    dh2, dh3 = hs[1] - hs[0], hs[2] - hs[0]
    alpha = Fraction(dh2 * (s3 - s1) - dh3 * (s2 - s1), det)
    beta = Fraction(dh3 * (r2 - r1) - dh2 * (r3 - r1), det)
    gamma = hs[0] - alpha * r1 - beta * s1
    return alpha, beta, gamma


def regular_subdivision(A: SupportSet, c: ProjPoint) -> RegularSubdivision:
    """Lower-hull subdivision of conv(A) induced by the lifting heights c."""
    if c.dim != A.n:
        raise ValueError(f"coefficient vector has {c.dim} entries, support has {A.n}")
    cells = set()
    idx = list(A.indices())
    for tri in combinations(idx, 3):
        if orient2d(*(A.rs(i) for i in tri)) == 0:
            continue
        alpha, beta, gamma = _cell_plane(A, c, tri)
        face = []
        lower = True
        for m in idx:
            r, s = A.rs(m)
            h = alpha * r + beta * s + gamma
            if c[m - 1] < h:
                lower = False
                break
            if c[m - 1] == h:
                face.append(m)
        if lower:
            cells.add(tuple(sorted(face)))
    return RegularSubdivision(A, tuple(sorted(cells)))


def curve_contains(A: SupportSet, c: ProjPoint, P: ProjPoint) -> bool:
    """True iff the minimum of {c_i + a_i . P} is attained at least twice."""
    return min_profile(support_values(A, c, P)).multiplicity >= 2


def cell_dual_point(A: SupportSet, c: ProjPoint, cell) -> ProjPoint:
    """The unique P where the three terms of `cell` tie, checked minimal.

    Raises "degenerate cell" when the three support points are collinear
    and "not a face" when any other term is <= the common value there
    (then the triangle is not a face of the subdivision).
    """
    cell = tuple(sorted(cell))
    if len(cell) != 3:
        raise ValueError("cell must be an index triple")
    alpha, beta, gamma = _cell_plane(A, c, cell)
    P = ProjPoint((-alpha, -beta, 0))
    common = gamma
    for m in A.indices():
        if m in cell:
            continue
        if c[m - 1] + dot(A.point(m), P) <= common:
            raise TropError("not a face")
    return P


def is_maximal(S: RegularSubdivision, mode: str = "strict") -> bool:
    """Every cell a 3-point triangle; strict mode also wants every point used."""
    if mode not in ("strict", "lenient"):
        raise ValueError(f"unknown mode {mode!r}")
    if any(len(cell) != 3 for cell in S.cells):
        return False
    if mode == "strict" and S.used != frozenset(S.support.indices()):
        return False
    return True


def secondary_cone_contains(A: SupportSet, S: RegularSubdivision, c: ProjPoint) -> bool:
    """True iff the heights c induce exactly the subdivision S (cellwise)."""
    return regular_subdivision(A, c).cells == S.cells


def _cell_faces(A: SupportSet, cell) -> list:
    """Boundary 1-faces of a cell's polygon, each as a sorted index tuple."""
    pts = {i: A.rs(i) for i in cell}
    hull = _hull_vertices(list(cell), pts)
    faces = []
    k = len(hull)
    for a, b in zip(hull, hull[1:] + hull[:1]) if k > 2 else [tuple(hull)]:
        on = [
            m
            for m in cell
            if orient2d(pts[a], pts[b], pts[m]) == 0 and _between(pts[a], pts[m], pts[b])
        ]
        faces.append(tuple(sorted(on)))
    return faces


def _between(p, q, r) -> bool:
    """q within the closed segment [p, r] (assumes collinear)."""
    return (
        min(p[0], r[0]) <= q[0] <= max(p[0], r[0])
        and min(p[1], r[1]) <= q[1] <= max(p[1], r[1])
    )


def _hull_vertices(ids, pts) -> list:
    """Convex-hull vertex ids in counterclockwise order (strict turns only)."""
    ids = sorted(ids, key=lambda i: pts[i])
    if len(ids) <= 2:
        return ids

    def chain(order):
        out = []
        for i in order:
            while len(out) >= 2 and orient2d(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(ids)
    upper = chain(ids[::-1])
    return lower[:-1] + upper[:-1]


def dual_curve(A: SupportSet, c: ProjPoint) -> CurveGraph:
    """The plane curve dual to the regular subdivision of (A, c)."""
    S = regular_subdivision(A, c)
    vertices = []
    cell_index = {}
    for cell in S.cells:
        alpha, beta, _ = _cell_plane(A, c, _spanning_triple(A, cell))
        cell_index[cell] = len(vertices)
        vertices.append(CurveVertex(ProjPoint((-alpha, -beta, 0)), cell))

    # Group 1-faces by their support-point set; shared by two cells => edge.
    face_cells = {}
    for cell in S.cells:
        for face in _cell_faces(A, cell):
            face_cells.setdefault(face, []).append(cell)

    edges, rays = [], []
    for face, owners in sorted(face_cells.items()):
        if len(owners) == 2:
            va, vb = sorted(cell_index[o] for o in owners)
            edges.append(CurveEdge(va, vb, face))
        elif len(owners) == 1:
            vi = cell_index[owners[0]]
            rays.append(CurveRay(vi, _ray_direction(A, face), face))
        else:
            raise TropError(f"1-face {face} shared by {len(owners)} cells")
    return CurveGraph(S, tuple(vertices), tuple(edges), tuple(rays))


def _spanning_triple(A: SupportSet, cell) -> tuple:
    for tri in combinations(cell, 3):
        if orient2d(*(A.rs(i) for i in tri)) != 0:
            return tri
    raise TropError("degenerate cell")


def _ray_direction(A: SupportSet, face) -> tuple:
    """Primitive direction of the curve ray dual to a boundary 1-face.

    Perpendicular to the face, with the sign making every other term grow
    along the ray: (a_k - a_i) . D >= 0 for all support points k.
    """
    i, j = face[0], face[-1]
    (r1, s1), (r2, s2) = A.rs(i), A.rs(j)
    cand = (-(s2 - s1), r2 - r1)
    for D in (cand, (-cand[0], -cand[1])):
        ok = True
        for m in A.indices():
            rm, sm = A.rs(m)
            if (rm - r1) * D[0] + (sm - s1) * D[1] < 0:
                ok = False
                break
        if ok:
            return primitive(D)
    raise TropError(f"face {face} is not on the hull boundary")
