"""Tropical determinants, generality of point configurations, and the
stable pencil through a configuration.

A configuration of n-2 plane points yields an (n-2) x n value matrix
M[k][l] = a_l . P_k.  Each pair {i, j} has a maximal minor (erase columns
i and j) whose tropical determinant is an assignment problem: minimize the
sum of one entry per row, one per remaining column.  The configuration is
general iff every minor's optimum is attained by a single bijection.

The assignment problem is solved by an exact potentials-based
augmenting-path search over rationals.  Uniqueness is certified on the
reduced matrix: after subtracting optimal row/column potentials the
optimal bijections are exactly the perfect matchings of the zero-entry
bipartite graph, so the optimum is unique iff that graph has no
alternating cycle through the matching found.

The tropical determinants of all pairs always satisfy the quartet
relations, so they are the pair coordinates of a line: the stable pencil
through the configuration, general or not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import ProjPoint, SupportSet, dot, rat
from .subdivision import curve_contains
from .trees import EmbeddedLine, PlueckerVector, plucker_to_tree


def value_matrix(A: SupportSet, config) -> list:
    """The (n-2) x n matrix with entries a_l . P_k, over the z = 0 chart."""
    config = list(config)
    if len(config) != A.n - 2:
        raise ValueError(f"need {A.n - 2} points, got {len(config)}")
    return [[dot(A.point(l), P) for l in A.indices()] for P in config]


@dataclass(frozen=True)
class TropdetResult:
    value: Fraction
    assignment: tuple  # column index per row, 0-based into the given matrix
    unique: bool


def tropdet(square) -> TropdetResult:
    """Minimum over bijections of the diagonal-sum, with a uniqueness flag."""
    M = [[rat(x) for x in row] for row in square]
    k = len(M)
    if any(len(row) != k for row in M):
        raise ValueError("matrix is not square")
    assignment, u, v = _assignment(M)
    value = sum(M[i][assignment[i]] for i in range(k))
    return TropdetResult(value, tuple(assignment), _is_unique(M, assignment, u, v))


def _assignment(M):
    """Exact Hungarian algorithm (potentials + augmenting paths)."""
    k = len(M)
    INF = float("inf")
    u = [Fraction(0)] * (k + 1)
    v = [Fraction(0)] * (k + 1)
    match = [0] * (k + 1)  # match[j] = row assigned to column j (1-based)
    for i in range(1, k + 1):
        match[0] = i
        j0 = 0
        minv = [INF] * (k + 1)
        way = [0] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0, delta, j1 = match[j0], INF, -1
            for j in range(1, k + 1):
                if used[j]:
                    continue
                cur = M[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(k + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    assignment = [0] * k
    for j in range(1, k + 1):
        assignment[match[j] - 1] = j - 1
    return assignment, u[1:], v[1:]


def _is_unique(M, assignment, u, v) -> bool:
    """No alternating cycle through the matching in the reduced-zero graph."""
    k = len(M)
    # sanity: potentials are dual-feasible and tight on the matching
    for i in range(k):
        for j in range(k):
            red = M[i][j] - u[i] - v[j]
            if red < 0 or (j == assignment[i] and red != 0):
                raise AssertionError("potentials are not optimal")
    # digraph on rows/columns: unmatched zero edges i -> j, matched j -> i
    succ = {("r", i): [] for i in range(k)}
    succ.update({("c", j): [] for j in range(k)})
    for i in range(k):
        for j in range(k):
            if M[i][j] - u[i] - v[j] == 0:
                if assignment[i] == j:
                    succ[("c", j)].append(("r", i))
                else:
                    succ[("r", i)].append(("c", j))
    color = {}

    def has_cycle(node) -> bool:
        color[node] = 1
        for nxt in succ[node]:
            c = color.get(nxt)
            if c == 1:
                return True
            if c is None and has_cycle(nxt):
                return True
        color[node] = 2
        return False

    return not any(color.get(nd) is None and has_cycle(nd) for nd in list(succ))


def minor_columns(n: int, i: int, j: int) -> list:
    return [l for l in range(1, n + 1) if l not in (i, j)]


def minor_tropdet(M, n: int, i: int, j: int) -> TropdetResult:
    """tropdet of the maximal minor erasing support columns i and j;
    the assignment is reported in 1-based support indices."""
    cols = minor_columns(n, i, j)
    res = tropdet([[row[c - 1] for c in cols] for row in M])
    return TropdetResult(res.value, tuple(cols[c] for c in res.assignment), res.unique)


@dataclass(frozen=True)
class GeneralityVerdict:
    general: bool
    singular_pair: tuple | None

    def __bool__(self) -> bool:
        return self.general


def is_general(A: SupportSet, config) -> GeneralityVerdict:
    """General iff every maximal minor's tropical determinant is unique;
    reports the first singular pair otherwise."""
    M = value_matrix(A, config)
    for i, j in combinations(A.indices(), 2):
        if not minor_tropdet(M, A.n, i, j).unique:
            return GeneralityVerdict(False, (i, j))
    return GeneralityVerdict(True, None)


def plucker_of_config(A: SupportSet, config) -> PlueckerVector:
    """Pair coordinates of the stable pencil: p_ij = tropdet of minor (i, j)."""
    M = value_matrix(A, config)
    return PlueckerVector(
        A.n,
        {
            (i, j): minor_tropdet(M, A.n, i, j).value
            for i, j in combinations(A.indices(), 2)
        },
    )


def stable_pencil(A: SupportSet, config) -> EmbeddedLine:
    """The stable pencil through the configuration, as an embedded line.

    For a general configuration this is the honest set of curves through
    all the points; otherwise it is the perturbed limit.
    """
    return plucker_to_tree(plucker_of_config(A, config))


def curves_through(A: SupportSet, config, L: EmbeddedLine, samples: int = 3) -> bool:
    """Check that the curve of every vertex of L, and of `samples` points
    per bounded edge and ray, passes through every configuration point."""
    config = list(config)
    if samples < 1:
        raise ValueError("samples must be positive")
    coeffs = [L.coords[v] for v in L.topology.internal_nodes]
    for a, b, side, ell in L.edges:
        q = L.coords[a]
        for k in range(1, samples + 1):
            t = ell * Fraction(k, samples + 1)
            coeffs.append(tuple(c + (t if i + 1 in side else 0) for i, c in enumerate(q)))
    for v, leaf in L.rays:
        q = L.coords[v]
        for k in range(1, samples + 1):
            t = Fraction(k)
            coeffs.append(tuple(c + (t if i + 1 == leaf else 0) for i, c in enumerate(q)))
    return all(
        curve_contains(A, ProjPoint(cvec), P) for cvec in coeffs for P in config
    )
