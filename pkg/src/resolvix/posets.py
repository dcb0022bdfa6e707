"""Finite and lazily enumerated strict partial orders.

Finite posets carry an explicit element tuple whose order doubles as the
enumeration order.  Lazy posets expose an enumerator, a decidable ``le``
and a strict-successor oracle; every lazy enumeration used here is
predecessor-closed (an element's full lower cone appears at earlier
indices), which is what lets interval and rank queries be certified
exactly inside a finite window.
"""

from dataclasses import dataclass, field
import math
import random

from .errors import CycleError, MaximalElement, NotComparable, WindowExceeded
from .partition import Partition


def transitive_closure(pairs):
    """Reflexivity-free transitive closure of a set of strict pairs."""
    pairs = list(pairs)
    succ = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(closed):
            for c in succ.get(b, ()):
                if (a, c) not in closed:
                    closed.add((a, c))
                    succ.setdefault(a, set()).add(c)
                    changed = True
    return closed


class FinitePoset:
    """A finite poset on opaque hashable element ids.

    ``pairs`` may be any generating set of relations; the reflexive
    closure is implicit and the transitive closure is taken on
    construction.  With ``check=True`` antisymmetry violations raise
    CycleError; with ``check=False`` the raw closed relation is kept so
    that is_well_founded can report the violation instead.
    """

    def __init__(self, elements, pairs, name="poset", check=True):
        self.elements = tuple(elements)
        self.name = name
        self._index = {}
        for i, e in enumerate(self.elements):
            if e in self._index:
                raise ValueError(f"duplicate element id {e!r}")
            self._index[e] = i
        for a, b in pairs:
            if a not in self._index or b not in self._index:
                raise ValueError(f"relation uses unknown element: {(a, b)!r}")
        self._strict = frozenset(transitive_closure((a, b) for a, b in pairs if a != b))
        if check:
            cyc = self.cycle_witness()
            if cyc is not None:
                raise CycleError(f"antisymmetry violated: {cyc!r}")

    def cycle_witness(self):
        for a, b in sorted(self._strict, key=self._pair_key):
            if a == b or (b, a) in self._strict:
                return (a, b)
        return None

    def _pair_key(self, pair):
        return (self._index[pair[0]], self._index[pair[1]])

    def __contains__(self, e):
        return e in self._index

    def __len__(self):
        return len(self.elements)

    def index(self, e):
        return self._index[e]

    def le(self, a, b):
        return a == b or (a, b) in self._strict

    def lt(self, a, b):
        return (a, b) in self._strict

    def strict_pairs(self):
        return self._strict

    def up_set(self, a):
        return frozenset(e for e in self.elements if self.le(a, e))

    def down_set(self, a):
        return frozenset(e for e in self.elements if self.le(e, a))

    def minimal_elements(self, within=None):
        pool = self.elements if within is None else [e for e in self.elements if e in set(within)]
        pool_set = set(pool)
        return tuple(e for e in pool if not any(self.lt(d, e) for d in pool_set))

    def covers(self, a):
        """Upper covers of a: minimal elements strictly above a."""
        above = [e for e in self.elements if self.lt(a, e)]
        return tuple(e for e in above if not any(self.lt(m, e) for m in above))

    def is_chain(self, elems):
        elems = list(elems)
        return all(self.le(a, b) or self.le(b, a) for i, a in enumerate(elems) for b in elems[i + 1:])

    def is_antichain(self, elems):
        elems = list(elems)
        return all(not self.lt(a, b) and not self.lt(b, a) for i, a in enumerate(elems) for b in elems[i + 1:])


class LazyPoset:
    """Base for lazily enumerated posets; subclasses fill in the oracles.

    Subclasses must keep ``element`` predecessor-closed: if q appears at
    index j, every p < q appears at some i < j.
    """

    name = "lazy"

    def element(self, i):
        raise NotImplementedError

    def le(self, a, b):
        raise NotImplementedError

    def succ(self, a):
        raise NotImplementedError

    def lt(self, a, b):
        return a != b and self.le(a, b)

    def window(self, n):
        return tuple(self.element(i) for i in range(n))

    def materialize(self, n, name=None):
        elems = self.window(n)
        pairs = [(a, b) for i, a in enumerate(elems) for b in elems[i + 1:] if self.le(a, b)]
        return FinitePoset(elems, pairs, name=name or f"{self.name}[{n}]")


class ChainPoset(LazyPoset):
    name = "chain"

    def element(self, i):
        return i

    def le(self, a, b):
        return a <= b

    def succ(self, a):
        return a + 1


class BinaryTreePoset(LazyPoset):
    """All finite 0/1 words ordered by prefix, enumerated level by level."""

    name = "tree2"

    def element(self, i):
        level = (i + 1).bit_length() - 1
        offset = i + 1 - (1 << level)
        return tuple((offset >> (level - 1 - k)) & 1 for k in range(level))

    def le(self, a, b):
        return len(a) <= len(b) and b[: len(a)] == a

    def succ(self, a):
        return a + (0,)


class GridPoset(LazyPoset):
    """The grid order on pairs of naturals, enumerated along diagonals.

    (a, n) is strictly below (b, m) iff a < b and n < m.
    """

    name = "grid"

    def element(self, i):
        d = int((math.isqrt(8 * i + 1) - 1) // 2)
        k = i - d * (d + 1) // 2
        return (k, d - k)

    def le(self, a, b):
        return a == b or (a[0] < b[0] and a[1] < b[1])

    def succ(self, a):
        return (a[0] + 1, a[1] + 1)


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object
    members: frozenset

    def __contains__(self, e):
        return e in self.members

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class RankTable:
    base: object
    ranks: dict

    def __contains__(self, e):
        return e in self.ranks

    def __getitem__(self, e):
        return self.ranks[e]


@dataclass(frozen=True)
class WellFoundedReport:
    ok: bool
    minimal_elements: tuple
    cycle: object = None

    def __bool__(self):
        return self.ok


def _window_elems(P, window):
    if isinstance(P, FinitePoset):
        return P.elements if window is None else P.elements[:window]
    if window is None:
        raise WindowExceeded("lazy posets require an explicit window")
    return P.window(window)


def interval(P, p, q, window=None):
    """All elements between p and q inclusive.

    For lazy posets the result is certified closed because enumerations
    are predecessor-closed: everything below q is already enumerated once
    q is.
    """
    if not P.le(p, q):
        raise NotComparable(f"{p!r} is not below {q!r}")
    if isinstance(P, FinitePoset):
        members = frozenset(r for r in P.elements if P.le(p, r) and P.le(r, q))
    else:
        elems = _window_elems(P, window)
        if q not in elems:
            raise WindowExceeded(f"interval endpoint {q!r} outside the enumerated window")
        members = frozenset(r for r in elems if P.le(p, r) and P.le(r, q))
    return Interval(lo=p, hi=q, members=members)


def longest_chain_size(P, members):
    """Number of elements of a longest chain inside ``members``."""
    members = list(members)
    order = {}

    def height(e):
        if e in order:
            return order[e]
        order[e] = 1  # guards against (broken) cyclic input
        h = 1 + max((height(d) for d in members if d != e and P.lt(d, e)), default=0)
        order[e] = h
        return h

    return max((height(e) for e in members), default=0)


def is_well_founded(P, window=None):
    """Check the finite window for cycles and report minimal elements.

    On a finite window the restriction is well-founded exactly when the
    relation has no antisymmetry violation, so the report carries either
    the minimal-element witness structure or an offending pair.
    """
    if isinstance(P, FinitePoset):
        cyc = P.cycle_witness()
        elems = _window_elems(P, window)
        if cyc is not None:
            return WellFoundedReport(False, (), cycle=cyc)
        pool = set(elems)
        minimal = tuple(e for e in elems if not any(P.lt(d, e) for d in pool))
        return WellFoundedReport(True, minimal)
    mat = P.materialize(window)
    return is_well_founded(mat)


def rank(P, base, window=None, chain_bound=None):
    """Well-founded rank above ``base``.

    The domain is every window element q >= base whose interval [base, q]
    contains no chain longer than ``chain_bound`` (defaulting to the
    window size, the scale at which "contains an infinite chain" is
    surrogated).
    """
    elems = _window_elems(P, window)
    if base not in elems:
        raise WindowExceeded(f"rank base {base!r} outside the window")
    bound = chain_bound if chain_bound is not None else len(elems)
    domain = []
    for q in elems:
        if not P.le(base, q):
            continue
        seg = [r for r in elems if P.le(base, r) and P.le(r, q)]
        if longest_chain_size(P, seg) <= bound:
            domain.append(q)
    dom = set(domain)
    ranks = {}

    def rk(t):
        if t in ranks:
            return ranks[t]
        if t == base:
            ranks[t] = 0
            return 0
        below = [s for s in dom if s != t and P.le(base, s) and P.le(s, t)]
        r = max((rk(s) + 1 for s in below), default=0)
        ranks[t] = r
        return r

    for q in domain:
        rk(q)
    return RankTable(base=base, ranks=ranks)


def stone_partition(P, steps, seed=0):
    """Streaming 2-coloring with both colors cofinal over the processed window.

    Elements are processed in enumeration order; whenever a processed
    element lacks an upper bound of some color among the colored
    elements, fresh strict successors are pulled and given the missing
    color.  Finite posets are rejected: they always have maximal
    elements.
    """
    if isinstance(P, FinitePoset):
        raise MaximalElement("finite posets have maximal elements and are rejected")
    rng = random.Random(seed)
    colored = {}
    color_order = []
    processed = []
    for i in range(steps):
        p = P.element(i)
        processed.append(p)
        if p not in colored:
            colored[p] = rng.randrange(2)
            color_order.append(p)
        for want in (0, 1):
            found = False
            for q in color_order:
                if colored[q] == want and P.le(p, q):
                    found = True
                    break
            if not found:
                q = P.succ(p)
                while q in colored:
                    if colored[q] == want and P.le(p, q):
                        found = True
                        break
                    q = P.succ(q)
                if not found:
                    colored[q] = want
                    color_order.append(q)
    part = Partition(dict(colored))
    return part, tuple(processed)


def check_stone_partition(P, part, processed):
    """Validator: every processed element has both colors weakly above it."""
    keys = list(part.assignment)
    for p in processed:
        for want in (0, 1):
            if not any(part.assignment[q] == want and P.le(p, q) for q in keys):
                return False, (p, want)
    return True, None


def greedy_antichain_cover(P, elems):
    """Cover ``elems`` by antichains, peeling minimal layers."""
    remaining = [e for e in (P.elements if isinstance(P, FinitePoset) else elems) if e in set(elems)]
    layers = []
    while remaining:
        pool = set(remaining)
        layer = [e for e in remaining if not any(P.lt(d, e) for d in pool)]
        layers.append(tuple(layer))
        remaining = [e for e in remaining if e not in set(layer)]
    return layers


def antichain_hitter(P, p, A, window=None, chain_bound=None):
    """The rank-minimizer antichain hitting chain-interval unions through p.

    With R the window elements above p whose interval from p stays
    chain-bounded and Q = R minus A, the result is the set of rank
    minimizers of [p, q] minus A over q in Q.  It is an antichain
    disjoint from A, and meets the union of initial intervals of any
    chain through p (with chain-bounded intervals) that contains a
    member of Q above p.
    """
    elems = _window_elems(P, window)
    if p not in elems:
        raise WindowExceeded(f"start element {p!r} outside the window")
    A = frozenset(A)
    greedy_antichain_cover(P, [a for a in elems if a in A])  # finitely many antichains: always certifiable here
    bound = chain_bound if chain_bound is not None else len(elems)
    table = rank(P, p, window=window, chain_bound=bound)
    order_index = {e: i for i, e in enumerate(elems)}
    Q = [q for q in elems if q in table.ranks and q not in A]
    B = set()
    for q in Q:
        seg = [r for r in elems if r in table.ranks and P.le(p, r) and P.le(r, q) and r not in A]
        if not seg:
            continue
        best = min(seg, key=lambda r: (table.ranks[r], order_index[r]))
        B.add(best)
    return frozenset(B)


def builtin_poset(name):
    """Lazy builtins selected by name; grid-builder configs build finitely."""
    if name == "chain":
        return ChainPoset()
    if name == "tree2":
        return BinaryTreePoset()
    if name == "grid":
        return GridPoset()
    if name.startswith("grid-builder:"):
        from .gridbuild import state_from_config, to_poset

        return to_poset(state_from_config(name.split(":", 1)[1]))
    raise ValueError(f"unknown builtin poset {name!r}")
