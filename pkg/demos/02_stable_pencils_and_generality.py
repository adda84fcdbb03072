"""From point configurations to pencils of curves.

Fix n support points and n-2 plane points.  The curves through all the
points form a line in the coefficient space TP^(n-1): a metric tree whose
pair coordinates are tropical determinants of the value matrix
M[k][l] = a_l . P_k.  When some determinant is achieved by two different
assignments the configuration is degenerate, and the tree for it is the
limit of trees of perturbed configurations (computable exactly with
first-order infinitesimals).

Run:  python3 demos/02_stable_pencils_and_generality.py
"""

from itertools import combinations

from troppencil import (
    ProjPoint,
    SupportSet,
    curves_through,
    is_general,
    stable_pencil,
    tree_to_plucker,
    value_matrix,
)
from troppencil.oracle import perturbed_pencil
from troppencil.stable import minor_tropdet

SQ = SupportSet(2, ((0, 0, 2), (1, 0, 1), (0, 1, 1), (1, 1, 0)))


def show_pencil(label, points):
    C = [ProjPoint(p) for p in points]
    print(f"\n=== configuration {label}: {[tuple(map(str, P)) for P in C]}")
    M = value_matrix(SQ, C)
    print("value matrix:", [[str(x) for x in row] for row in M])
    for i, j in combinations(range(1, 5), 2):
        res = minor_tropdet(M, 4, i, j)
        tag = "unique" if res.unique else "TIED"
        print(f"  minor ({i},{j}): tropdet = {res.value}  [{tag}]")
    verdict = is_general(SQ, C)
    print("general:", verdict.general, "" if verdict.general else f"(pair {verdict.singular_pair})")
    L = stable_pencil(SQ, C)
    print("pencil tree:", L)
    print("pair coordinates:", tree_to_plucker(L))
    print("all curves pass through the configuration:", curves_through(SQ, C, L))
    return C, L


# A general configuration: the pencil is an honest trivalent tree with the
# split {1,3}|{2,4} and lattice length 1.
show_pencil("general", [(0, 0, 0), (2, 1, 0)])

# Pull the second point to (1,1,0): minor (1,4) ties, the internal edge
# collapses, and the pencil degenerates to a star.
C2, L2 = show_pencil("degenerate star", [(0, 0, 0), (1, 1, 0)])

# A different degeneration keeps an edge but with a repeated minor.
show_pencil("degenerate segment", [(0, 0, 0), (0, 1, 0)])

# ---------------------------------------------------------------------------
# The degenerate pencils really are limits: nudge the points by first-order
# infinitesimals, recompute everything in that arithmetic, let eps -> 0.

twin = perturbed_pencil(SQ, C2, seed=0)
print("\nperturbation oracle agrees with the direct computation:", twin == L2)
twin2 = perturbed_pencil(SQ, C2, seed=12345)
print("and is independent of the seed:", twin2 == L2)
