"""Slow reference implementations used for differential testing.

These are deliberately naive: assignment problems by full enumeration,
curve membership by exhaustive breakpoint walks, and stable pencils as
honest limits of first-order infinitesimal perturbations.  They ship with
the library (not only the tests) so verdicts can be re-derived on demand.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from .core import ProjPoint, SupportSet, TropError, min_profile, rat
from .pencil import shifted_line
from .trees import EmbeddedLine, PlueckerVector, TreeTopology, plucker_to_tree


class EpsRational:
    """A rational plus a first-order infinitesimal: value + eps * slope.

    Ordered lexicographically; products truncate at first order.  Supports
    mixed arithmetic with ints and Fractions so generic code runs on it.
    """

    __slots__ = ("value", "slope")

    def __init__(self, value, slope=Fraction(0)):
        object.__setattr__(self, "value", rat(value))
        object.__setattr__(self, "slope", rat(slope))

    @staticmethod
    def _lift(x):
        if isinstance(x, EpsRational):
            return x
        if isinstance(x, (int, Fraction)):
            return EpsRational(rat(x))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return EpsRational(self.value + o.value, self.slope + o.slope)

    __radd__ = __add__

    def __neg__(self):
        return EpsRational(-self.value, -self.slope)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return EpsRational(
            self.value * o.value, self.value * o.slope + self.slope * o.value
        )

    __rmul__ = __mul__

    def _cmp(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a = (self.value, self.slope)
        b = (o.value, o.slope)
        return (a > b) - (a < b)

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __eq__(self, other):
        c = self._cmp(other)
        return False if c is NotImplemented else c == 0

    def __hash__(self):
        if self.slope == 0:
            return hash(self.value)
        return hash((self.value, self.slope))

    def __repr__(self):
        return f"({self.value}+{self.slope}e)"


def brute_tropdet(square) -> tuple:
    """(minimum, number of optimal bijections) by full enumeration."""
    k = len(square)
    if k > 8:
        raise ValueError("brute-force tropdet capped at size 8")
    best, mult = None, 0
    for perm in permutations(range(k)):
        s = square[0][perm[0]]
        for i in range(1, k):
            s = s + square[i][perm[i]]
        if best is None or s < best:
            best, mult = s, 1
        elif s == best:
            mult += 1
    return best, mult


def sampled_fixed(L: EmbeddedLine, A: SupportSet, P: ProjPoint) -> bool:
    """Fixed-point test by walking every breakpoint of L + A.P.

    On each edge and ray, the coordinate functions are affine in the
    parameter, so the argmin can only change where two of them cross;
    checking every crossing and every midpoint in between is exhaustive
    and exact.
    """
    G = shifted_line(L, A, P)
    n = G.n

    def multiplicity_ok(q, grow, t) -> bool:
        vals = [q[i] + (t if (i + 1) in grow else 0) for i in range(n)]
        return min_profile(vals).multiplicity >= 2

    def walk(q, grow, ell) -> bool:
        cuts = {Fraction(0)}
        if ell is not None:
            cuts.add(ell)
        for i in grow:
            for j in range(1, n + 1):
                if j in grow:
                    continue
                t = q[j - 1] - q[i - 1]
                if 0 < t and (ell is None or t < ell):
                    cuts.add(t)
        pts = sorted(cuts)
        checks = list(pts)
        checks += [(a + b) / 2 for a, b in zip(pts, pts[1:])]
        if ell is None:
            checks.append(pts[-1] + 1)
        return all(multiplicity_ok(q, grow, t) for t in checks)

    for a, b, side, ell in G.edges:
        if not walk(G.coords[a], side, ell):
            return False
    for v, leaf in G.rays:
        if not walk(G.coords[v], {leaf}, None):
            return False
    return True


class PerturbationError(TropError):
    pass


def perturbed_pencil(A: SupportSet, config, seed: int = 0, attempts: int = 8) -> EmbeddedLine:
    """Stable pencil as the limit of a first-order perturbed configuration.

    Each point is nudged by seed-dependent infinitesimals until every
    maximal minor becomes uniquely optimal (re-drawn up to `attempts`
    times); the pencil of the perturbed configuration is computed entirely
    in first-order arithmetic and evaluated at eps -> 0.  The result is
    independent of the seed.
    """
    config = list(config)
    if len(config) != A.n - 2:
        raise ValueError(f"need {A.n - 2} points, got {len(config)}")
    last = None
    for attempt in range(attempts):
        rng = random.Random(1000 * seed + attempt)
        eps_points = []
        for P in config:
            xi, eta = rng.randint(-999, 999), rng.randint(-999, 999)
            eps_points.append(
                (
                    EpsRational(P[0], Fraction(xi)),
                    EpsRational(P[1], Fraction(eta)),
                    EpsRational(Fraction(0)),
                )
            )
        try:
            p = _eps_plucker(A, eps_points)
        except PerturbationError as e:
            last = e
            continue
        return _eps_limit(plucker_to_tree(p))
    raise PerturbationError(f"perturbation not generic after {attempts} draws: {last}")


def _eps_plucker(A: SupportSet, eps_points) -> PlueckerVector:
    n = A.n
    M = []
    for x, y, _ in eps_points:
        r0 = EpsRational(Fraction(0))
        M.append([A.point(l)[0] * x + A.point(l)[1] * y + r0 for l in A.indices()])
    values = {}
    for i, j in combinations(range(1, n + 1), 2):
        cols = [l for l in range(1, n + 1) if l not in (i, j)]
        sub = [[row[c - 1] for c in cols] for row in M]
        val, mult = brute_tropdet(sub)
        if mult != 1:
            raise PerturbationError(f"minor ({i},{j}) still has {mult} optima")
        values[(i, j)] = val
    return PlueckerVector(n, values)


def _eps_limit(L_eps: EmbeddedLine) -> EmbeddedLine:
    """Evaluate an infinitesimally-embedded line at eps -> 0, contracting
    the edges whose length vanishes in the limit."""
    topo = L_eps.topology
    n = topo.n
    parent = {v: v for v in topo.internal_nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b, side, ell in L_eps.edges:
        if ell.value == 0:
            parent[find(a)] = find(b)
    reps = sorted({find(v) for v in topo.internal_nodes})
    relabel = {rep: n + 1 + i for i, rep in enumerate(reps)}
    adj = {relabel[rep]: set() for rep in reps}
    for leaf in range(1, n + 1):
        w = relabel[find(topo.node_of_leaf(leaf))]
        adj[leaf] = {w}
        adj[w].add(leaf)
    for a, b, side, ell in L_eps.edges:
        if ell.value > 0:
            ra, rb = relabel[find(a)], relabel[find(b)]
            adj[ra].add(rb)
            adj[rb].add(ra)
    coords = {}
    for rep in reps:
        coords[relabel[rep]] = tuple(c.value for c in L_eps.coords[rep])
    return EmbeddedLine(TreeTopology(n, adj), coords)
