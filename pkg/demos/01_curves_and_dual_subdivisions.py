"""Plane curves in the min-plus world and their dual subdivisions.

A support set fixes which monomials exist; a coefficient vector c turns
them into the piecewise-linear function F_c(P) = min_i (c_i + a_i . P).
The curve is where the minimum is achieved twice, and its shape is read
off combinatorially: lift each support point to height c_i, take the
lower hull, and dualize.

Run:  python3 demos/01_curves_and_dual_subdivisions.py
"""

from fractions import Fraction

from troppencil import (
    ProjPoint,
    SupportSet,
    cell_dual_point,
    curve_contains,
    dual_curve,
    is_maximal,
    regular_subdivision,
    secondary_cone_contains,
)
from troppencil.svg import curve_svg

# the running example: the four vertices of the unit square, degree 2
SQ = SupportSet(2, ((0, 0, 2), (1, 0, 1), (0, 1, 1), (1, 1, 0)))

print("support points (r, s, t):", SQ.points)

# ---------------------------------------------------------------------------
# Three coefficient vectors, three subdivisions of the square.

for label, c in [
    ("flat lift", ProjPoint((0, 0, 0, 0))),
    ("lift a1", ProjPoint((1, 0, 0, 0))),
    ("generic", ProjPoint((3, 1, 2, 1))),
]:
    S = regular_subdivision(SQ, c)
    print(f"\nc = {tuple(map(str, c))}  ({label})")
    print("  cells:", S.cells)
    print("  maximal (strict):", is_maximal(S, "strict"))

# The flat lift keeps the square whole; any generic lift cuts it along a
# diagonal.  Which diagonal depends on the sign of c1 - c2 - c3 + c4.

# ---------------------------------------------------------------------------
# The dual curve: one vertex per cell, placed where the cell's terms tie.

c = ProjPoint((1, 0, 0, 0))
curve = dual_curve(SQ, c)
print("\ndual curve of c = (1,0,0,0):")
for v in curve.vertices:
    print("  vertex", tuple(map(str, v.point)), "dual to cell", v.cell)
for e in curve.edges:
    print("  bounded edge between vertices", e.a, "and", e.b, "dual to", e.dual)
for r in curve.rays:
    print("  ray from vertex", r.vertex, "direction", r.direction, "dual to", r.dual)

# The vertex of cell {1,2,3} solves 1 + 2z = x + z = y + z, so (1,1,0):
P = cell_dual_point(SQ, c, (1, 2, 3))
print("dual point of {1,2,3}:", tuple(map(str, P)))
assert curve_contains(SQ, c, P)

# ---------------------------------------------------------------------------
# Membership is a pure tie test, no geometry needed:

for P in [(1, 1, 0), (0, 0, 0), (5, Fraction(1, 2), 0)]:
    P = ProjPoint(P)
    print("curve passes through", tuple(map(str, P)), "->", curve_contains(SQ, c, P))

# ---------------------------------------------------------------------------
# Secondary cones: all coefficient vectors inducing the same subdivision.

S = regular_subdivision(SQ, c)
for query in [(2, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, -1)]:
    inside = secondary_cone_contains(SQ, S, ProjPoint(query))
    print("c' =", query, "induces the same subdivision:", inside)

with open("curve_sq.svg", "w") as fh:
    fh.write(curve_svg(curve))
print("\nwrote curve_sq.svg (curve with the subdivision inset)")
