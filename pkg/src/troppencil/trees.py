"""Tropical lines in TP^(n-1) as labelled metric trees.

A line is an n-leaf tree: leaf i sits at infinity on a ray with direction
e_i, and an internal edge whose far side carries the leaf set I points in
direction e_I = sum_{i in I} e_i.  Crossing such an edge adds (lattice
length) * e_I to the vertex coordinates, which we keep as one consistent
raw lift in R^n per line.

The translation to and from tropical Pluecker vectors (the coordinates on
the space of lines) is derived from the circuit conditions: at the median
vertex m of leaves {i, j, k} the three quantities p_jk + m_i, p_ik + m_j,
p_ij + m_k coincide.  Reconstruction enumerates leaf bipartitions, keeps
those whose quartets are strictly dominant (their minimum over spanning
quartets is the lattice length of the corresponding edge), and places the
vertex next to leaf k at x_l = p_kl, x_k = max_{i,j} (p_ki + p_kj - p_ij).
Ties produce zero-length edges, which are contracted, so degenerate lines
come out as trees with higher-valence vertices.

Everything here is generic over an ordered field: the scalar type only
needs +, -, comparisons and multiplication by small integers, so the same
code runs over Fraction and over first-order infinitesimal perturbations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .core import ProjPoint, TropError, rat


class PlueckerError(TropError):
    """Raised when a pair vector violates the quartet relation."""


def _coerce(x):
    return rat(x) if isinstance(x, (int, str, Fraction)) else x


class TreeTopology:
    """A leaf-labelled tree: leaves 1..n, internal node ids above n,
    every internal node of valence >= 3 (no 2-valent nodes)."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: dict):
        self.n = n
        self.adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._validate()

    def _validate(self):
        nodes = set(self.adj)
        if set(range(1, self.n + 1)) - nodes:
            raise ValueError("missing leaf nodes")
        deg_sum = 0
        for v, nb in self.adj.items():
            for w in nb:
                if v not in self.adj.get(w, ()):
                    raise ValueError("adjacency is not symmetric")
            deg_sum += len(nb)
            if self.is_leaf(v):
                if len(nb) != 1:
                    raise ValueError(f"leaf {v} has valence {len(nb)}")
            elif len(nb) < 3:
                raise ValueError(f"internal node {v} has valence {len(nb)} < 3")
        if deg_sum != 2 * (len(nodes) - 1):
            raise ValueError("not a tree (wrong edge count)")
        # connectivity
        seen = {1}
        stack = [1]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != nodes:
            raise ValueError("not connected")

    def is_leaf(self, v: int) -> bool:
        return 1 <= v <= self.n

    @property
    def internal_nodes(self) -> list:
        return sorted(v for v in self.adj if not self.is_leaf(v))

    @property
    def internal_edges(self) -> list:
        """Internal edges as (a, b) with a < b."""
        out = []
        for v in self.internal_nodes:
            for w in self.adj[v]:
                if not self.is_leaf(w) and v < w:
                    out.append((v, w))
        return sorted(out)

    def is_trivalent(self) -> bool:
        return all(len(self.adj[v]) == 3 for v in self.internal_nodes)

    def node_of_leaf(self, i: int) -> int:
        (v,) = self.adj[i]
        return v

    def leaves_beyond(self, a: int, b: int) -> frozenset:
        """Leaves in the component of b after removing the edge (a, b)."""
        seen = {a, b}
        stack = [b]
        leaves = set()
        while stack:
            v = stack.pop()
            if self.is_leaf(v):
                leaves.add(v)
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(leaves)

    def leaf_partition(self, v: int) -> list:
        """Leaf sets of the components of the tree minus the node v."""
        return [self.leaves_beyond(v, w) for w in sorted(self.adj[v])]

    def path(self, a: int, b: int) -> list:
        """Node sequence from a to b."""
        prev = {a: None}
        stack = [a]
        while stack:
            v = stack.pop()
            if v == b:
                break
            for w in self.adj[v]:
                if w not in prev:
                    prev[w] = v
                    stack.append(w)
        out = [b]
        while out[-1] != a:
            out.append(prev[out[-1]])
        return out[::-1]

    def median(self, i: int, j: int, k: int) -> int:
        """The unique node on all three pairwise paths between i, j, k."""
        common = set(self.path(i, j)) & set(self.path(i, k)) & set(self.path(j, k))
        (m,) = common
        return m

    def splits(self) -> list:
        """One (edge, I) per internal edge; I is the side without leaf n."""
        out = []
        for a, b in self.internal_edges:
            side = self.leaves_beyond(a, b)
            if self.n in side:
                side = self.leaves_beyond(b, a)
            out.append(((a, b), side))
        return sorted(out, key=lambda e: (len(e[1]), sorted(e[1])))

    def split_set(self) -> frozenset:
        return frozenset(side for _, side in self.splits())

    def __eq__(self, other):
        return (
            isinstance(other, TreeTopology)
            and self.n == other.n
            and self.split_set() == other.split_set()
        )

    def __hash__(self):
        return hash((self.n, self.split_set()))

    def __repr__(self):
        parts = ["{%s}" % ",".join(map(str, sorted(s))) for s in sorted(self.split_set(), key=sorted)]
        return f"TreeTopology(n={self.n}, splits=[{' '.join(parts)}])"

    @classmethod
    def star(cls, n: int) -> "TreeTopology":
        adj = {i: {n + 1} for i in range(1, n + 1)}
        adj[n + 1] = set(range(1, n + 1))
        return cls(n, adj)

    @classmethod
    def from_splits(cls, n: int, splits) -> "TreeTopology":
        """Build the unique tree whose internal edges realize the given
        splits (each a set of leaves not containing n, sizes 2..n-2)."""
        fam = []
        for s in splits:
            s = frozenset(s)
            if n in s:
                s = frozenset(range(1, n + 1)) - s
            if not 2 <= len(s) <= n - 2:
                raise ValueError(f"split {sorted(s)} has a side smaller than 2")
            if s not in fam:
                fam.append(s)
        for s1, s2 in combinations(fam, 2):
            if s1 & s2 and not (s1 <= s2 or s2 <= s1):
                raise ValueError(f"incompatible splits {sorted(s1)}, {sorted(s2)}")
        fam.sort(key=lambda s: (-len(s), sorted(s)))
        root = n + 1
        node_of = {}
        nxt = n + 2
        for s in fam:
            node_of[s] = nxt
            nxt += 1
        adj = {root: set()}
        for s in fam:
            sups = [t for t in fam if s < t]
            parent = node_of[min(sups, key=len)] if sups else root
            adj.setdefault(node_of[s], set()).add(parent)
            adj.setdefault(parent, set()).add(node_of[s])
        for leaf in range(1, n + 1):
            holders = [t for t in fam if leaf in t]
            parent = node_of[min(holders, key=len)] if holders else root
            adj[leaf] = {parent}
            adj[parent].add(leaf)
        return cls(n, adj)


class EmbeddedLine:
    """A tropical line: topology plus one consistent raw coordinate lift.

    For every internal edge (a, b), coords(b) - coords(a) equals
    length * e_I where I = leaves beyond b; lengths are positive.
    """

    __slots__ = ("topology", "coords", "_edges")

    def __init__(self, topology: TreeTopology, coords: dict):
        self.topology = topology
        self.coords = {v: tuple(_coerce(c) for c in cs) for v, cs in coords.items()}
        if set(self.coords) != set(topology.internal_nodes):
            raise ValueError("coordinates must cover exactly the internal nodes")
        for cs in self.coords.values():
            if len(cs) != topology.n:
                raise ValueError("coordinate vectors must have one entry per leaf")
        self._edges = []
        for a, b in topology.internal_edges:
            side = topology.leaves_beyond(a, b)
            delta = [cb - ca for ca, cb in zip(self.coords[a], self.coords[b])]
            on = {delta[i - 1] for i in side}
            off = {delta[i - 1] for i in range(1, topology.n + 1) if i not in side}
            # the difference must be length * e_side modulo the all-ones vector
            if len(on) != 1 or len(off) != 1:
                raise ValueError(f"edge ({a},{b}) does not follow the e_I rule")
            ell = next(iter(on)) - next(iter(off))
            if not ell > 0:
                raise ValueError("non-positive length")
            self._edges.append((a, b, side, ell))

    @property
    def n(self) -> int:
        return self.topology.n

    @property
    def edges(self) -> list:
        """(a, b, leaves-beyond-b, length) per internal edge, a < b."""
        return list(self._edges)

    @property
    def rays(self) -> list:
        """(internal node, leaf) per unbounded edge."""
        return sorted((self.topology.node_of_leaf(i), i) for i in range(1, self.n + 1))

    def raw(self, v: int) -> tuple:
        return self.coords[v]

    def vertex_point(self, v: int) -> ProjPoint:
        return ProjPoint(self.coords[v])

    def edge_lengths(self) -> dict:
        """Lattice length per split (keyed by the side without leaf n)."""
        out = {}
        for a, b, side, ell in self._edges:
            if self.n in side:
                side = frozenset(range(1, self.n + 1)) - side
            out[side] = ell
        return out

    def translate(self, shift) -> "EmbeddedLine":
        """The line translated by a vector of TP^(n-1)."""
        shift = tuple(_coerce(s) for s in shift)
        return EmbeddedLine(
            self.topology,
            {v: tuple(c + s for c, s in zip(cs, shift)) for v, cs in self.coords.items()},
        )

    def canonical_key(self):
        """Hashable invariant: equal keys iff equal lines (as subsets of
        TP^(n-1) with the same combinatorics)."""
        items = []
        for v in self.topology.internal_nodes:
            part = tuple(sorted(tuple(sorted(s)) for s in self.topology.leaf_partition(v)))
            items.append((part, ProjPoint(self.coords[v]).coords))
        return (self.n, tuple(sorted(items)))

    def __eq__(self, other):
        return isinstance(other, EmbeddedLine) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        vs = ", ".join(
            f"{v}:({','.join(str(c) for c in ProjPoint(cs).coords)})"
            for v, cs in sorted(self.coords.items())
        )
        return f"EmbeddedLine(n={self.n}, vertices {vs})"


def embed(topology: TreeTopology, lengths, anchor_node: int, anchor_coords) -> EmbeddedLine:
    """Place a topology in TP^(n-1) by propagating from an anchored node.

    `lengths` maps internal edges to positive lattice lengths; keys may be
    frozensets {a, b} of node ids or the split's leaf side (either side).
    """
    if topology.is_leaf(anchor_node):
        raise ValueError("anchor node must be internal")
    if isinstance(anchor_coords, ProjPoint):
        anchor_coords = anchor_coords.coords
    coords = {anchor_node: tuple(_coerce(c) for c in anchor_coords)}
    n = topology.n

    def edge_length(a, b):
        for key in (frozenset((a, b)),):
            if key in lengths:
                return _coerce(lengths[key])
        side = topology.leaves_beyond(a, b)
        for key in (side, frozenset(range(1, n + 1)) - side):
            if key in lengths:
                return _coerce(lengths[key])
        raise ValueError(f"no length given for edge ({a},{b})")

    stack = [anchor_node]
    while stack:
        a = stack.pop()
        for b in topology.adj[a]:
            if topology.is_leaf(b) or b in coords:
                continue
            ell = edge_length(a, b)
            if not ell > 0:
                raise ValueError("non-positive length")
            side = topology.leaves_beyond(a, b)
            coords[b] = tuple(
                c + (ell if i + 1 in side else 0) for i, c in enumerate(coords[a])
            )
            stack.append(b)
    return EmbeddedLine(topology, coords)


def line_contains(L: EmbeddedLine, c: ProjPoint) -> bool:
    """True iff c lies on a vertex, bounded edge or leaf ray of L."""
    if c.dim != L.n:
        raise ValueError("dimension mismatch")
    for v in L.topology.internal_nodes:
        if ProjPoint(L.coords[v]) == c:
            return True
    for a, b, side, ell in L.edges:
        t = _ray_parameter(L.coords[a], c.coords, side, L.n)
        if t is not None and 0 <= t <= ell:
            return True
    for v, leaf in L.rays:
        t = _ray_parameter(L.coords[v], c.coords, frozenset((leaf,)), L.n)
        if t is not None and t >= 0:
            return True
    return False


def _ray_parameter(base, target, side, n):
    """Solve target == base + t * e_side in TP^(n-1); None if unsolvable."""
    delta = [t - b for b, t in zip(base, target)]
    on = {delta[i - 1] for i in side}
    off = {delta[i - 1] for i in range(1, n + 1) if i not in side}
    if len(on) != 1 or len(off) != 1:
        return None
    return next(iter(on)) - next(iter(off))


class PlueckerVector:
    """The (n choose 2) tropical pair coordinates of a line, stored with
    the canonical normalization p_{n-1,n} = 0."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict):
        self.n = n
        vals = {}
        for key, v in values.items():
            i, j = sorted(key)
            if not (1 <= i < j <= n):
                raise ValueError(f"bad pair {key}")
            vals[frozenset((i, j))] = _coerce(v)
        if len(vals) != n * (n - 1) // 2:
            raise ValueError("need a value for every pair")
        ref = vals[frozenset((n - 1, n))]
        self.values = {k: v - ref for k, v in vals.items()}

    def get(self, i: int, j: int):
        return self.values[frozenset((i, j))]

    def quartet_sums(self, i, j, k, l) -> tuple:
        """The three pairings of {i,j,k,l}: ((ij|kl) sum, (ik|jl), (il|jk))."""
        return (
            self.get(i, j) + self.get(k, l),
            self.get(i, k) + self.get(j, l),
            self.get(i, l) + self.get(j, k),
        )

    def validate(self):
        """Check the quartet relation: the minimum of the three pairing
        sums is attained at least twice, for every quartet."""
        for q in combinations(range(1, self.n + 1), 4):
            sums = self.quartet_sums(*q)
            m = min(sums)
            if sum(1 for s in sums if s == m) < 2:
                raise PlueckerError(f"not a Pluecker vector: quartet {q} fails")

    def __eq__(self, other):
        return (
            isinstance(other, PlueckerVector)
            and self.n == other.n
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted((tuple(sorted(k)), v) for k, v in self.values.items()))))

    def __repr__(self):
        pairs = ", ".join(
            f"p{i}{j}={self.get(i, j)}" for i, j in combinations(range(1, self.n + 1), 2)
        )
        return f"PlueckerVector({pairs})"


def tree_to_plucker(L: EmbeddedLine) -> PlueckerVector:
    """Pair coordinates of a line, from the median relations
    p_jk + m_i = p_ik + m_j = p_ij + m_k at m = median(i, j, k)."""
    n = L.n
    topo = L.topology

    def med_coords(i, j, k):
        return L.coords[topo.median(i, j, k)]

    zero = next(iter(L.coords.values()))[0] * 0
    p = {frozenset((n - 1, n)): zero}
    for i in range(1, n - 1):
        m = med_coords(i, n - 1, n)
        p[frozenset((i, n))] = m[i - 1] - m[n - 2]
        p[frozenset((i, n - 1))] = m[i - 1] - m[n - 1]
    for i, j in combinations(range(1, n - 1), 2):
        m = med_coords(i, j, n)
        p[frozenset((i, j))] = p[frozenset((j, n))] + m[i - 1] - m[n - 1]
    return PlueckerVector(n, p)


def plucker_to_tree(p: PlueckerVector) -> EmbeddedLine:
    """The embedded line with pair coordinates p (inverse of
    tree_to_plucker up to the choice of raw lift).

    A leaf bipartition is an edge of the tree iff its quartets strictly
    dominate; the edge's lattice length is the smallest dominance gap.
    Zero gaps are ties, i.e. contracted edges, so the output can have
    vertices of valence above three.
    """
    p.validate()
    n = p.n
    splits = {}
    for size in range(2, n - 1):
        for I in combinations(range(1, n), size):
            Iset = frozenset(I)
            comp = [k for k in range(1, n + 1) if k not in Iset]
            gap = None
            for i, j in combinations(I, 2):
                for k, l in combinations(comp, 2):
                    s_same = p.get(i, j) + p.get(k, l)
                    s_cross = max(p.get(i, k) + p.get(j, l), p.get(i, l) + p.get(j, k))
                    d = s_same - s_cross
                    if gap is None or d < gap:
                        gap = d
            if gap > 0:
                splits[Iset] = gap
    topology = TreeTopology.from_splits(n, splits.keys())

    # vertex next to leaf 1, then propagate along the split directions
    v1 = topology.node_of_leaf(1)
    x = [None] * n
    for l in range(2, n + 1):
        x[l - 1] = p.get(1, l)
    x[0] = max(
        p.get(1, i) + p.get(1, j) - p.get(i, j)
        for i, j in combinations(range(2, n + 1), 2)
    )
    lengths = {
        side if n not in side else frozenset(range(1, n + 1)) - side: ell
        for side, ell in splits.items()
    }
    return embed(topology, lengths, v1, tuple(x))


def splits(T: TreeTopology) -> list:
    """Splits of a topology: one (edge, side-without-leaf-n) per internal edge."""
    return T.splits()
