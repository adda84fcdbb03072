"""Shared fixtures and random generators for the test suite.

The four named fixtures recur everywhere:

- SQ: the unit-square support {(0,0,2), (1,0,1), (0,1,1), (1,1,0)}
- LSQ: the line with split {1,3}|{2,4}, length 1, vertices (2,0,1,0)
  and (1,0,0,0); it is the stable pencil of CFG
- CFG: the configuration {(0,0,0), (2,1,0)}, general for SQ
- TRI: the triangle support of degree 1 (pencils of min-plus lines)

All randomness is seeded per test; generators live here so the many
differential suites draw from the same distributions.
"""

import random
from fractions import Fraction
from math import ceil

import pytest

from troppencil import ProjPoint, SupportSet
from troppencil.compat import enumerate_types
from troppencil.trees import TreeTopology, embed


@pytest.fixture
def SQ():
    return SupportSet(2, ((0, 0, 2), (1, 0, 1), (0, 1, 1), (1, 1, 0)))


@pytest.fixture
def TRI():
    return SupportSet(1, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


@pytest.fixture
def TRI5():
    return SupportSet.from_rs(2, [(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)])


@pytest.fixture
def HEX6():
    return SupportSet.from_rs(2, [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)])


def make_lsq():
    topo = TreeTopology.from_splits(4, [frozenset({1, 3})])
    return embed(topo, {frozenset({1, 3}): Fraction(1)}, topo.node_of_leaf(2), (1, 0, 0, 0))


@pytest.fixture
def LSQ():
    return make_lsq()


@pytest.fixture
def CFG():
    return [ProjPoint((0, 0, 0)), ProjPoint((2, 1, 0))]


def rand_rational(rng, span=10, den=3):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_proj_point(rng, span=10, den=3):
    return ProjPoint((rand_rational(rng, span, den), rand_rational(rng, span, den), 0))


def rand_config(rng, n, span=10, den=3):
    return [rand_proj_point(rng, span, den) for _ in range(n - 2)]


def rand_support(rng, n):
    d = rng.choice([2, 3]) if n <= 6 else 3
    pool = [(r, s) for r in range(d + 1) for s in range(d + 1 - r)]
    while True:
        pts = rng.sample(pool, n)
        try:
            return SupportSet.from_rs(d, pts)
        except ValueError:
            continue


def rand_topology(rng, n, contract_p=0.0):
    types = enumerate_types(n)
    T = types[rng.randrange(len(types))]
    if contract_p > 0:
        kept = [s for s in T.split_set() if rng.random() >= contract_p]
        T = TreeTopology.from_splits(n, kept)
    return T


def rand_line(rng, n, span=10):
    T = rand_topology(rng, n)
    lengths = {
        frozenset(e): Fraction(rng.randint(1, 8), rng.randint(1, 3))
        for e in T.internal_edges
    }
    anchor = T.internal_nodes[rng.randrange(len(T.internal_nodes))]
    coords = tuple(rand_rational(rng, span, 2) for _ in range(n))
    return embed(T, lengths, anchor, coords)


def plant_line(rng, n, t):
    """A line with an m-valent vertex p forced into Pi(G, I) with
    |I - I_j| >= t for every component, so the whole line lies in Pi_t
    and p is the attachment point."""
    while True:
        T = rand_topology(rng, n, contract_p=0.3)
        p = T.internal_nodes[rng.randrange(len(T.internal_nodes))]
        parts = [sorted(s) for s in T.leaf_partition(p)]
        sizes = None
        for _ in range(64):
            trial = [rng.randint(0, len(part)) for part in parts]
            total = sum(trial)
            if all(total - a >= t for a in trial):
                sizes = trial
                break
        if sizes is None:
            if all(n - len(part) >= t for part in parts):
                sizes = [len(part) for part in parts]
            else:
                continue  # this vertex cannot support level t; redraw
        I = set()
        for part, k in zip(parts, sizes):
            I |= set(rng.sample(part, k))
        coords = [Fraction(0)] * n
        for i in range(1, n + 1):
            if i not in I:
                coords[i - 1] = Fraction(rng.randint(0, 9), rng.randint(1, 2))
        lengths = {
            frozenset(e): Fraction(rng.randint(1, 6), rng.randint(1, 2))
            for e in T.internal_edges
        }
        return embed(T, lengths, p, tuple(coords)), p, frozenset(I)


def skeleton_bound(m: int, t: int) -> int:
    return ceil(Fraction(m * t, m - 1))
