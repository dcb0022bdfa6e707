"""Shared fixtures: dyadic families, random families and random posets."""

import random

import pytest

from resolvix.families import NamedSet, SetFamily
from resolvix.posets import FinitePoset, transitive_closure


def dyadic_interval_name(k, a):
    return f"d{k}_{a}"


def dyadic_family(levels, resolution, meeting=False, name="dyadic"):
    """Dyadic intervals of [0,1) down to scale 2^-(levels-1).

    Ground points are the ``resolution`` cells of [0,1).  With
    ``meeting=False`` a member's trace is the cells it fully contains
    (deep members go empty); with ``meeting=True`` the cells it meets,
    and the proper-subset oracle compares real endpoints so equal-trace
    members still descend.
    """
    ground = frozenset(range(resolution))
    members = []
    spans = {}
    for k in range(levels):
        scale = 2 ** k
        for a in range(scale):
            nm = dyadic_interval_name(k, a)
            lo, hi = a * resolution, (a + 1) * resolution  # in cell units * scale
            spans[nm] = (lo, hi, scale)
            cells = []
            for c in range(resolution):
                c_lo, c_hi = c * scale, (c + 1) * scale
                inside = lo <= c_lo and c_hi <= hi
                meets = max(lo, c_lo) < min(hi, c_hi)
                if (meeting and meets) or (not meeting and inside):
                    cells.append(c)
            members.append(NamedSet(nm, frozenset(cells), payload=(lo, hi, scale)))

    def proper(a_set, b_set):
        if a_set.payload is None or b_set.payload is None:
            return a_set.points < b_set.points
        alo, ahi, asc = a_set.payload
        blo, bhi, bsc = b_set.payload
        a_l, a_h = alo * bsc, ahi * bsc  # common denominator resolution*asc*bsc
        b_l, b_h = blo * asc, bhi * asc
        return b_l <= a_l and a_h <= b_h and (a_l, a_h) != (b_l, b_h)

    return SetFamily(members, ground, proper_subset=proper, name=name, allow_empty=True)


def subset_family(n_points, name="subsets"):
    """Every nonempty subset of the ground, named by bitmask."""
    ground = frozenset(range(n_points))
    members = [
        NamedSet(f"u{mask}", frozenset(p for p in range(n_points) if mask >> p & 1))
        for mask in range(1, 1 << n_points)
    ]
    return SetFamily(members, ground, name=name)


def random_family(rng, max_members=12, max_ground=8, oracle_prob=0.5):
    """Random traces over a random ground plus a random consistent subset oracle."""
    g = rng.randint(1, max_ground)
    ground = frozenset(range(g))
    n = rng.randint(1, max_members)
    members = []
    for i in range(n):
        size = rng.randint(0, g)
        members.append(NamedSet(f"m{i}", frozenset(rng.sample(range(g), size))))
    edges = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a, b = members[i], members[j]
            if a.points <= b.points and i < j and rng.random() < oracle_prob:
                edges.add((a.name, b.name))
    changed = True
    while changed:
        changed = False
        for x, y in list(edges):
            for y2, z in list(edges):
                if y == y2 and (x, z) not in edges and x != z:
                    edges.add((x, z))
                    changed = True

    def proper(a, b):
        return (a.name, b.name) in edges or a.points < b.points

    # the closure of "oracle or trace-proper" stays transitive and acyclic
    return SetFamily(members, ground, proper_subset=proper, allow_empty=True)


def random_finite_poset(rng, n, edge_prob=0.3, name="rand"):
    elems = list(range(n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_prob]
    return FinitePoset(elems, pairs, name=name)


@pytest.fixture
def rng():
    return random.Random(20240817)
