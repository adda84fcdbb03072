"""Write-only SVG rendering of curves, subdivisions and fixed loci.

Geometry is asserted elsewhere; these drawings are a human aid, so float
conversion at the last step is fine here (and only here).
"""

from __future__ import annotations

from .subdivision import CurveGraph

_STYLE = 'stroke="#1f4e79" stroke-width="2" fill="none"'
_RAY_REACH = 4  # how far beyond the bounding box rays are drawn


def _bounds(points, pad=1.5):
    xs = [float(x) for x, _ in points] or [0.0]
    ys = [float(y) for _, y in points] or [0.0]
    return min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad


class _Canvas:
    def __init__(self, x0, x1, y0, y1, size=420):
        self.x0, self.x1, self.y0, self.y1 = x0, x1, y0, y1
        span = max(x1 - x0, y1 - y0, 1e-9)
        self.scale = size / span
        self.size = size
        self.parts = []

    def map(self, p):
        px = (float(p[0]) - self.x0) * self.scale
        py = self.size - (float(p[1]) - self.y0) * self.scale
        return px, py

    def line(self, p, q, style=_STYLE):
        (x1, y1), (x2, y2) = self.map(p), self.map(q)
        self.parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" {style}/>'
        )

    def dot(self, p, r=4, color="#c0392b"):
        x, y = self.map(p)
        self.parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{color}"/>')

    def render(self) -> str:
        w = self.size + 40
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" '
            f'viewBox="-20 -20 {w} {w}">'
        )
        return head + "".join(self.parts) + "</svg>"


def curve_svg(curve: CurveGraph) -> str:
    pts = [(v.point[0], v.point[1]) for v in curve.vertices]
    x0, x1, y0, y1 = _bounds(pts)
    canvas = _Canvas(x0, x1, y0, y1)
    for e in curve.edges:
        canvas.line(pts[e.a], pts[e.b])
    reach = _RAY_REACH * max(x1 - x0, y1 - y0)
    for r in curve.rays:
        px, py = pts[r.vertex]
        q = (float(px) + reach * r.direction[0], float(py) + reach * r.direction[1])
        canvas.line(pts[r.vertex], q)
    for p in pts:
        canvas.dot(p)
    # subdivision inset, upper-right corner
    A = curve.subdivision.support
    rs = [A.rs(i) for i in A.indices()]
    ix0, ix1, iy0, iy1 = _bounds(rs, pad=0.5)
    inset = _Canvas(ix0, ix1, iy0, iy1, size=90)
    seen = set()
    for cell in curve.subdivision.cells:
        for i in cell:
            for j in cell:
                if i < j and (i, j) not in seen:
                    seen.add((i, j))
                    inset.line(A.rs(i), A.rs(j), 'stroke="#7f8c8d" stroke-width="1.5"')
    for p in rs:
        inset.dot(p, r=2.5, color="#2c3e50")
    body = canvas.render()[:-6]  # strip closing tag
    shifted = f'<g transform="translate({canvas.size - 75},-12)">{inset.render()}</g>'
    return body + shifted + "</svg>"


def pieces_svg(pieces) -> str:
    from . import plane

    pts = []
    for g in pieces:
        if isinstance(g, plane.PointGeom):
            pts.append((g.x, g.y))
        elif isinstance(g, plane.SegmentGeom):
            pts.extend([g.start, g.end])
        elif isinstance(g, (plane.RayGeom, plane.LineGeom)):
            pts.append(g.origin)
    x0, x1, y0, y1 = _bounds(pts)
    canvas = _Canvas(x0, x1, y0, y1)
    reach = _RAY_REACH * max(x1 - x0, y1 - y0)
    for g in pieces:
        if isinstance(g, plane.PointGeom):
            canvas.dot((g.x, g.y))
        elif isinstance(g, plane.SegmentGeom):
            canvas.line(g.start, g.end)
            canvas.dot(g.start, r=3)
            canvas.dot(g.end, r=3)
        elif isinstance(g, plane.RayGeom):
            q = (
                float(g.origin[0]) + reach * g.direction[0],
                float(g.origin[1]) + reach * g.direction[1],
            )
            canvas.line(g.origin, q)
            canvas.dot(g.origin, r=3)
        elif isinstance(g, plane.LineGeom):
            q1 = (
                float(g.origin[0]) + reach * g.direction[0],
                float(g.origin[1]) + reach * g.direction[1],
            )
            q2 = (
                float(g.origin[0]) - reach * g.direction[0],
                float(g.origin[1]) - reach * g.direction[1],
            )
            canvas.line(q1, q2)
    return canvas.render()
