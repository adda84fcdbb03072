"""Fixed loci of linear pencils and the hyperplane-skeleton machinery.

A point P of TP^2 is fixed for the pencil parameterized by a line L with
support A iff the translated line G = L + A.P lies inside Pi_2, the locus
where the coordinate minimum is attained at least twice.  That containment
is decided exactly by a walk over the vertices, bounded edges and rays of
G: along an edge in direction e_J the coordinates split into a growing
group J and a constant group, so the minimum changes regime at the single
breakpoint where the two group minima cross, and only the group
multiplicities on each regime matter.

The locus itself is enumerated per the two witness patterns at points
c of L: three leaves in pairwise distinct components of L - {c}, or two
leaf pairs in two distinct components; each candidate yields linear
equalities and inequalities for P, solved exactly in the z = 0 chart.

Pi(G, I) denotes the subset of G where every coordinate in I attains the
global minimum; these subsets are closed connected subtrees, represented
below as vertex sets plus closed parameter intervals per edge and ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import plane
from .core import ProjPoint, SupportSet, TropError, dot, min_profile, rat
from .trees import EmbeddedLine


def support_shift(A: SupportSet, P: ProjPoint) -> tuple:
    """The translation vector A.P = (a_i . P)_i."""
    return tuple(dot(A.point(i), P) for i in A.indices())


def shifted_line(L: EmbeddedLine, A: SupportSet, P: ProjPoint) -> EmbeddedLine:
    """The translate G = L + A.P, again a tropical line."""
    if A.n != L.n:
        raise ValueError("support size and leaf count differ")
    return L.translate(support_shift(A, P))


# ---------------------------------------------------------------------------
# skeleton walk


def _group_min(values):
    m = min(values)
    return m, sum(1 for v in values if v == m)


def skeleton_level(G: EmbeddedLine) -> int:
    """The largest t with G contained in Pi_t (t = 1 always holds)."""
    level = None

    def feed(k):
        nonlocal level
        level = k if level is None else min(level, k)

    n = G.n
    for v in G.topology.internal_nodes:
        feed(min_profile(G.coords[v]).multiplicity)
    for a, b, side, ell in G.edges:
        q = G.coords[a]
        mu1, k1 = _group_min([q[i - 1] for i in side])
        mu0, k0 = _group_min([q[i - 1] for i in range(1, n + 1) if i not in side])
        tstar = mu0 - mu1
        if min(tstar, ell) > 0:
            feed(k1)
        if tstar < ell:
            feed(k0)
    for v, leaf in G.rays:
        q = G.coords[v]
        mu0, k0 = _group_min([q[i - 1] for i in range(1, n + 1) if i != leaf])
        feed(1 if q[leaf - 1] < mu0 else k0)
    return level


def line_in_pi(G: EmbeddedLine, t: int = 2) -> bool:
    return skeleton_level(G) >= t


def is_fixed(L: EmbeddedLine, A: SupportSet, P: ProjPoint) -> bool:
    """True iff every curve of the pencil L passes through P."""
    return line_in_pi(shifted_line(L, A, P), 2)


# ---------------------------------------------------------------------------
# points on a line and subtree subsets


@dataclass(frozen=True)
class LinePoint:
    """A point of an embedded line: a vertex, an edge-interior point at
    parameter t from the edge's first node, or a ray-interior point."""

    kind: str  # "vertex" | "edge" | "ray"
    loc: tuple  # node id, or (a, b), or (node, leaf)
    t: Fraction | None = None


def make_point(G: EmbeddedLine, kind: str, loc, t=None) -> LinePoint:
    """Build a LinePoint, normalizing edge/ray endpoints to vertices."""
    if kind == "vertex":
        return LinePoint("vertex", loc)
    t = rat(t)
    if kind == "edge":
        a, b, side, ell = _edge_data(G, loc)
        if t == 0:
            return LinePoint("vertex", a)
        if t == ell:
            return LinePoint("vertex", b)
        if not 0 < t < ell:
            raise ValueError("edge parameter out of range")
        return LinePoint("edge", (a, b), t)
    if kind == "ray":
        if t == 0:
            return LinePoint("vertex", loc[0])
        if t < 0:
            raise ValueError("ray parameter out of range")
        return LinePoint("ray", tuple(loc), t)
    raise ValueError(f"unknown point kind {kind!r}")


def _edge_data(G: EmbeddedLine, key):
    for a, b, side, ell in G.edges:
        if (a, b) == tuple(key):
            return a, b, side, ell
    raise KeyError(f"no internal edge {key}")


def coords_at(G: EmbeddedLine, p: LinePoint) -> tuple:
    """Raw coordinates of a line point."""
    if p.kind == "vertex":
        return G.coords[p.loc]
    if p.kind == "edge":
        a, b, side, ell = _edge_data(G, p.loc)
        q = G.coords[a]
        return tuple(q[i] + (p.t if i + 1 in side else 0) for i in range(G.n))
    v, leaf = p.loc
    q = G.coords[v]
    return tuple(q[i] + (p.t if i + 1 == leaf else 0) for i in range(G.n))


def point_valence(G: EmbeddedLine, p: LinePoint) -> int:
    return len(G.topology.adj[p.loc]) if p.kind == "vertex" else 2


def point_to_proj(G: EmbeddedLine, p: LinePoint) -> ProjPoint:
    return ProjPoint(coords_at(G, p))


class SubtreeSet:
    """A closed subset of an embedded line: vertices plus closed parameter
    intervals on edges ((lo, hi) within [0, length]) and rays ((lo, hi) with
    hi None for unbounded)."""

    __slots__ = ("line", "vertices", "edge_iv", "ray_iv")

    def __init__(self, line: EmbeddedLine, vertices=(), edge_iv=None, ray_iv=None):
        self.line = line
        verts = set(vertices)
        eiv = {}
        for key, (lo, hi) in (edge_iv or {}).items():
            a, b, side, ell = _edge_data(line, key)
            lo, hi = max(lo, Fraction(0)), min(hi, ell)
            if lo > hi:
                continue
            if lo == 0:
                verts.add(a)
            if hi == ell:
                verts.add(b)
            if lo == hi:
                if 0 < lo < ell:
                    eiv[(a, b)] = (lo, hi)
                continue
            eiv[(a, b)] = (lo, hi)
        riv = {}
        for key, (lo, hi) in (ray_iv or {}).items():
            lo = max(lo, Fraction(0))
            if hi is not None and lo > hi:
                continue
            if lo == 0:
                verts.add(key[0])
            if hi is not None and lo == hi:
                if lo > 0:
                    riv[tuple(key)] = (lo, hi)
                continue
            riv[tuple(key)] = (lo, hi)
        self.vertices = frozenset(verts)
        self.edge_iv = eiv
        self.ray_iv = riv

    def is_empty(self) -> bool:
        return not self.vertices and not self.edge_iv and not self.ray_iv

    def key(self):
        return (
            self.vertices,
            tuple(sorted(self.edge_iv.items())),
            tuple(sorted(self.ray_iv.items())),
        )

    def __eq__(self, other):
        return isinstance(other, SubtreeSet) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def contains(self, p: LinePoint) -> bool:
        if p.kind == "vertex":
            return p.loc in self.vertices
        if p.kind == "edge":
            iv = self.edge_iv.get(p.loc)
            return iv is not None and iv[0] <= p.t <= iv[1]
        iv = self.ray_iv.get(p.loc)
        return iv is not None and iv[0] <= p.t and (iv[1] is None or p.t <= iv[1])

    def boundary_points(self) -> list:
        """Vertices of the set plus interval endpoints, as LinePoints."""
        pts = [LinePoint("vertex", v) for v in sorted(self.vertices)]
        for key, (lo, hi) in sorted(self.edge_iv.items()):
            for t in {lo, hi}:
                p = make_point(self.line, "edge", key, t)
                if p.kind == "edge":
                    pts.append(p)
        for key, (lo, hi) in sorted(self.ray_iv.items()):
            ends = {lo} if hi is None else {lo, hi}
            for t in ends:
                p = make_point(self.line, "ray", key, t)
                if p.kind == "ray":
                    pts.append(p)
        return pts

    def finite_points(self) -> list | None:
        """All points when the set is finite, None when it has a segment."""
        for lo, hi in self.edge_iv.values():
            if lo != hi:
                return None
        for lo, hi in self.ray_iv.values():
            if hi is None or lo != hi:
                return None
        return self.boundary_points()

    def component_count(self) -> int:
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        items = [("v", v) for v in self.vertices]
        items += [("e", k) for k in self.edge_iv]
        items += [("r", k) for k in self.ray_iv]
        for it in items:
            parent[it] = it
        for key, (lo, hi) in self.edge_iv.items():
            a, b, side, ell = _edge_data(self.line, key)
            if lo == 0 and a in self.vertices:
                union(("e", key), ("v", a))
            if hi == ell and b in self.vertices:
                union(("e", key), ("v", b))
        for key, (lo, hi) in self.ray_iv.items():
            if lo == 0 and key[0] in self.vertices:
                union(("r", key), ("v", key[0]))
        return len({find(it) for it in items})

    def intersection(self, other: "SubtreeSet") -> "SubtreeSet":
        verts = self.vertices & other.vertices
        eiv = {}
        for key in self.edge_iv.keys() & other.edge_iv.keys():
            lo = max(self.edge_iv[key][0], other.edge_iv[key][0])
            hi = min(self.edge_iv[key][1], other.edge_iv[key][1])
            if lo <= hi:
                eiv[key] = (lo, hi)
        riv = {}
        for key in self.ray_iv.keys() & other.ray_iv.keys():
            lo = max(self.ray_iv[key][0], other.ray_iv[key][0])
            h1, h2 = self.ray_iv[key][1], other.ray_iv[key][1]
            hi = h1 if h2 is None else h2 if h1 is None else min(h1, h2)
            if hi is None or lo <= hi:
                riv[key] = (lo, hi)
        # vertices only survive when both sets carry them
        return SubtreeSet(self.line, verts, eiv, riv)


def full_set(G: EmbeddedLine) -> SubtreeSet:
    return SubtreeSet(
        G,
        set(G.topology.internal_nodes),
        {(a, b): (Fraction(0), ell) for a, b, _, ell in G.edges},
        {key: (Fraction(0), None) for key in G.rays},
    )


def pi_set(G: EmbeddedLine, I) -> SubtreeSet:
    """Pi(G, I): points of G where every coordinate in I is a global min."""
    I = frozenset(I)
    if not I:
        return full_set(G)
    n = G.n
    verts = {
        v
        for v in G.topology.internal_nodes
        if I <= min_profile(G.coords[v]).argmin
    }
    eiv = {}
    for a, b, side, ell in G.edges:
        iv = _pi_interval(G.coords[a], side, ell, I, n)
        if iv is not None:
            eiv[(a, b)] = iv
    riv = {}
    for v, leaf in G.rays:
        iv = _pi_interval(G.coords[v], frozenset((leaf,)), None, I, n)
        if iv is not None:
            riv[(v, leaf)] = iv
    return SubtreeSet(G, verts, eiv, riv)


def _pi_interval(q, J, ell, I, n):
    """Parameter interval on one edge/ray where all of I attain the minimum."""
    muJ, _ = _group_min([q[i - 1] for i in J])
    mu0, _ = _group_min([q[i - 1] for i in range(1, n + 1) if i not in J])
    tstar = mu0 - muJ
    lo, hi = Fraction(0), ell  # None means unbounded (rays)
    I_in, I_out = I & J, I - J
    if I_in:
        if any(q[i - 1] != muJ for i in I_in):
            return None
        hi = tstar if hi is None else min(hi, tstar)
    if I_out:
        if any(q[i - 1] != mu0 for i in I_out):
            return None
        lo = max(lo, tstar)
    if hi is not None and lo > hi:
        return None
    return (lo, hi)


def _hang(G: EmbeddedLine, start: int, avoid: int) -> SubtreeSet:
    """Everything at the internal node `start` and beyond, not crossing
    back through `avoid` (vertices, whole edges, whole rays)."""
    topo = G.topology
    verts = {start}
    eiv, riv = {}, {}
    stack = [start]
    seen = {start, avoid}
    while stack:
        v = stack.pop()
        for w in topo.adj[v]:
            if w == avoid and v == start:
                continue
            if topo.is_leaf(w):
                riv[(v, w)] = (Fraction(0), None)
                continue
            if w in seen:
                continue
            seen.add(w)
            verts.add(w)
            key = (v, w) if v < w else (w, v)
            eiv[key] = (Fraction(0), _edge_data(G, key)[3])
            stack.append(w)
    return SubtreeSet(G, verts, eiv, riv)


def _union(G: EmbeddedLine, sets) -> SubtreeSet:
    verts = set()
    eiv, riv = {}, {}
    for s in sets:
        verts |= s.vertices
        for key, (lo, hi) in s.edge_iv.items():
            if key in eiv:
                plo, phi = eiv[key]
                if max(lo, plo) > min(hi, phi):
                    raise TropError("disconnected union on one edge")
                eiv[key] = (min(lo, plo), max(hi, phi))
            else:
                eiv[key] = (lo, hi)
        for key, (lo, hi) in s.ray_iv.items():
            if key in riv:
                plo, phi = riv[key]
                nhi = None if (hi is None or phi is None) else max(hi, phi)
                riv[key] = (min(lo, plo), nhi)
            else:
                riv[key] = (lo, hi)
    return SubtreeSet(G, verts, eiv, riv)


def branches_at(G: EmbeddedLine, p: LinePoint) -> list:
    """The closed branches hanging at p: one (leaf set, branch) per
    component of G - {p}, each branch including p itself."""
    topo = G.topology
    out = []
    if p.kind == "vertex":
        v = p.loc
        for w in sorted(topo.adj[v]):
            if topo.is_leaf(w):
                br = SubtreeSet(G, {v}, {}, {(v, w): (Fraction(0), None)})
                out.append((frozenset((w,)), br))
            else:
                key = (v, w) if v < w else (w, v)
                edge = SubtreeSet(G, {v}, {key: (Fraction(0), _edge_data(G, key)[3])}, {})
                out.append((topo.leaves_beyond(v, w), _union(G, [edge, _hang(G, w, v)])))
        return out
    if p.kind == "edge":
        a, b, side, ell = _edge_data(G, p.loc)
        lowpart = SubtreeSet(G, set(), {(a, b): (Fraction(0), p.t)}, {})
        highpart = SubtreeSet(G, set(), {(a, b): (p.t, ell)}, {})
        out.append((topo.leaves_beyond(b, a), _union(G, [lowpart, _hang(G, a, b)])))
        out.append((side, _union(G, [highpart, _hang(G, b, a)])))
        return out
    v, leaf = p.loc
    near = SubtreeSet(G, set(), {}, {(v, leaf): (Fraction(0), p.t)})
    far = SubtreeSet(G, set(), {}, {(v, leaf): (p.t, None)})
    rest = _union(G, [near] + [br for _, br in branches_at(G, LinePoint("vertex", v)) if (v, leaf) not in br.ray_iv])
    out.append((frozenset(range(1, G.n + 1)) - {leaf}, rest))
    out.append((frozenset((leaf,)), far))
    return out


def _point_only(G: EmbeddedLine, p: LinePoint) -> SubtreeSet:
    if p.kind == "vertex":
        return SubtreeSet(G, {p.loc}, {}, {})
    if p.kind == "edge":
        return SubtreeSet(G, set(), {p.loc: (p.t, p.t)}, {})
    return SubtreeSet(G, set(), {}, {p.loc: (p.t, p.t)})


def pi_attachment(G: EmbeddedLine, I) -> LinePoint | None:
    """The point x with Pi(G, I) = {x} plus the branches free of I-leaves;
    None when Pi(G, I) is empty.  Raises when no such point exists."""
    I = frozenset(I)
    S = pi_set(G, I)
    if S.is_empty():
        return None
    seen = set()
    hits = []
    for p in S.boundary_points():
        if p in seen:
            continue
        seen.add(p)
        kept = [br for leaves, br in branches_at(G, p) if not (leaves & I)]
        if _union(G, [_point_only(G, p)] + kept) == S:
            hits.append(p)
    if len(hits) != 1:
        raise TropError(f"Pi(G, {sorted(I)}) has {len(hits)} attachment points")
    return hits[0]


def subtree_spanning(G: EmbeddedLine, I) -> SubtreeSet:
    """The minimal subtree of G containing the leaves in I (full rays
    plus the connecting paths)."""
    I = sorted(set(I))
    if not I:
        return SubtreeSet(G, set(), {}, {})
    topo = G.topology
    verts = set()
    eiv = {}
    riv = {(topo.node_of_leaf(i), i): (Fraction(0), None) for i in I}
    for i, j in combinations(I, 2):
        path = topo.path(topo.node_of_leaf(i), topo.node_of_leaf(j))
        verts.update(path)
        for a, b in zip(path, path[1:]):
            key = (a, b) if a < b else (b, a)
            eiv[key] = (Fraction(0), _edge_data(G, key)[3])
    verts.update(topo.node_of_leaf(i) for i in I)
    return SubtreeSet(G, verts, eiv, riv)


def pi_gamma(G: EmbeddedLine) -> ProjPoint:
    """The distinguished point through which every nonempty Pi(G, I)
    attaches.  Requires G inside Pi_2."""
    p = pi_gamma_location(G)
    return point_to_proj(G, p)


def pi_gamma_location(G: EmbeddedLine) -> LinePoint:
    if not line_in_pi(G, 2):
        raise TropError("line not in Pi_2")
    imax = [i for i in range(1, G.n + 1) if not pi_set(G, {i}).is_empty()]
    p = pi_attachment(G, imax)
    if p is None:
        raise TropError("no coordinate ever attains the minimum")
    return p


# ---------------------------------------------------------------------------
# fixed locus enumeration


@dataclass(frozen=True)
class FixedLocusCell:
    """One candidate cell of the fixed locus: the witness point of L, the
    support indices required to attain the minimum, and the exact linear
    description of the admissible P (closed)."""

    witness: tuple  # ("vertex", node) or ("edge", (a, b), t-form)
    indices: tuple
    equalities: tuple  # affine forms, = 0
    inequalities: tuple  # affine forms, >= 0
    geometry: object  # plane geometry, never None in fixed_locus output

    def contains(self, P: ProjPoint) -> bool:
        x, y = P[0], P[1]
        return all(plane.evaluate(f, x, y) == 0 for f in self.equalities) and all(
            plane.evaluate(f, x, y) >= 0 for f in self.inequalities
        )


def _term_forms(A: SupportSet, raw) -> list:
    """Affine forms T_m(P) = raw_m + a_m . P in the z = 0 chart, 1-based."""
    forms = [None]
    for m in A.indices():
        r, s, _ = A.point(m)
        forms.append(plane.form(r, s, raw[m - 1]))
    return forms


def _sub(f, g):
    return (f[0] - g[0], f[1] - g[1], f[2] - g[2])


def fixed_locus(L: EmbeddedLine, A: SupportSet) -> list:
    """All cells of {P : is_fixed(L, A, P)}, pruned to nonempty geometry.

    Zero-dimensional duplicates are removed; boundary points of segment
    cells may still reappear as vertex cells, by design (cells are closed).
    """
    if A.n != L.n:
        raise ValueError("support size and leaf count differ")
    cells = []
    topo = L.topology
    for v in topo.internal_nodes:
        T = _term_forms(A, L.coords[v])
        parts = sorted(topo.leaf_partition(v), key=sorted)
        # three leaves in three distinct components
        for pa, pb, pc in combinations(range(len(parts)), 3):
            for i in sorted(parts[pa]):
                for j in sorted(parts[pb]):
                    for k in sorted(parts[pc]):
                        eqs = (_sub(T[i], T[j]), _sub(T[j], T[k]))
                        ineqs = tuple(_sub(T[m], T[i]) for m in A.indices())
                        geom = plane.solve(eqs, ineqs)
                        if geom is not None:
                            cells.append(
                                FixedLocusCell(("vertex", v), (i, j, k), eqs, ineqs, geom)
                            )
        # two leaf pairs in two distinct components
        for pa, pb in combinations(range(len(parts)), 2):
            for i, j in combinations(sorted(parts[pa]), 2):
                for k, l in combinations(sorted(parts[pb]), 2):
                    eqs = (_sub(T[i], T[j]), _sub(T[k], T[l]), _sub(T[i], T[k]))
                    ineqs = tuple(_sub(T[m], T[i]) for m in A.indices())
                    geom = plane.solve(eqs, ineqs)
                    if geom is not None:
                        cells.append(
                            FixedLocusCell(("vertex", v), (i, j, k, l), eqs, ineqs, geom)
                        )
    for a, b, side, ell in L.edges:
        T = _term_forms(A, L.coords[a])
        inside = sorted(side)
        outside = sorted(set(range(1, L.n + 1)) - side)
        for i, j in combinations(inside, 2):
            for k, l in combinations(outside, 2):
                tform = _sub(T[k], T[i])  # edge parameter of the witness point
                eqs = (_sub(T[i], T[j]), _sub(T[k], T[l]))
                ineqs = (
                    tuple(_sub(T[m], T[i]) for m in inside)
                    + tuple(_sub(T[m], T[k]) for m in outside)
                    + (tform, _sub(plane.form(0, 0, ell), tform))
                )
                geom = plane.solve(eqs, ineqs)
                if geom is not None:
                    cells.append(
                        FixedLocusCell(("edge", (a, b), tform), (i, j, k, l), eqs, ineqs, geom)
                    )
    # deduplicate zero-dimensional cells
    out, seen_points = [], set()
    for cell in cells:
        if isinstance(cell.geometry, plane.PointGeom):
            if cell.geometry in seen_points:
                continue
            seen_points.add(cell.geometry)
        out.append(cell)
    return out


def fixed_locus_pieces(L: EmbeddedLine, A: SupportSet) -> list:
    """The fixed locus collapsed to disjoint maximal geometric pieces."""
    return plane.canonical_pieces([c.geometry for c in fixed_locus(L, A)])


def locus_contains(cells, P: ProjPoint) -> bool:
    return any(c.contains(P) for c in cells)
