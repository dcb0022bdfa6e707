"""Homogeneous interval chains and the antichain anti-homogeneity coloring.

The finite surrogate for "contains an infinite chain" is a chain of at
least ``threshold`` elements (default 3); every report carries the
threshold it was computed at.
"""

from dataclasses import dataclass
import random

from .errors import InductionStuck, WindowExceeded
from .partition import Partition
from .posets import (
    FinitePoset,
    antichain_hitter,
    greedy_antichain_cover,
    interval,
    longest_chain_size,
)

DEFAULT_CHAIN_THRESHOLD = 3


@dataclass(frozen=True)
class IntervalChainWitness:
    color: int
    chain: tuple
    certified_intervals: tuple  # the initial intervals [p0, pj]


@dataclass(frozen=True)
class IMaximalInterval:
    color: int
    lo: object
    hi: object
    certified_in_window: bool = True


def find_homogeneous_chain(P, part, k, window=None):
    """A strictly increasing chain of length k with every initial interval
    monochromatic, or None after examining all in-window chains.

    Only the last initial interval needs checking during the search since
    initial intervals are nested; the returned witness certifies all of
    them explicitly.
    """
    elems = P.elements if isinstance(P, FinitePoset) else P.window(window)
    if not part.is_total_on(elems):
        raise WindowExceeded("partition is not total on the window")
    order = {e: i for i, e in enumerate(elems)}

    def grow(chain, color):
        if len(chain) == k:
            return chain
        last = chain[-1]
        for e in elems:
            if not P.lt(last, e):
                continue
            seg = interval(P, chain[0], e, window=len(elems)).members
            if all(part.assignment[r] == color for r in seg):
                full = grow(chain + [e], color)
                if full is not None:
                    return full
        return None

    for p0 in elems:
        color = part.assignment[p0]
        found = grow([p0], color)
        if found is not None:
            certified = tuple(
                frozenset(interval(P, found[0], pj, window=len(elems)).members) for pj in found
            )
            return IntervalChainWitness(color, tuple(found), certified)
    return None


def i_maximal_extension(P, part, s, window=None):
    """Some t above s with [s, t] maximal monochromatic within the window.

    Candidates are scanned in enumeration order; the first one none of
    whose strict in-window extensions stays inside the color class wins.
    ``certified_in_window`` is False when the winner has no in-window
    strict successors at all (its maximality may be a window artifact).
    """
    elems = P.elements if isinstance(P, FinitePoset) else P.window(window)
    color = part.assignment[s]
    candidates = [
        t
        for t in elems
        if P.le(s, t)
        and all(part.assignment[r] == color for r in interval(P, s, t, window=len(elems)).members)
    ]
    for t in candidates:
        extensions = [z for z in elems if P.lt(t, z)]
        if all(
            any(
                part.assignment[r] != color
                for r in interval(P, s, z, window=len(elems)).members
            )
            for z in extensions
        ):
            return IMaximalInterval(color, s, t, certified_in_window=bool(extensions))
    return None


@dataclass(frozen=True)
class AvoidingColoring:
    partition: Partition
    antichains: tuple  # per color: tuple of antichains
    long_intervals: tuple
    threshold: int


def _long_intervals(P, elems, threshold):
    out = []
    n = len(elems)
    for lo in elems:
        for hi in elems:
            if P.le(lo, hi):
                seg = interval(P, lo, hi, window=n).members
                if longest_chain_size(P, seg) >= threshold:
                    out.append((lo, hi))
    return out


def build_avoiding_partition(P, window=None, seed=0, threshold=DEFAULT_CHAIN_THRESHOLD):
    """A 2-coloring with no monochromatic initial-interval chain at scale.

    Follows the inductive recipe: each color class grows as a finite
    union of antichains; every long-chain interval gets both colors; and
    per element two hitting antichains (built from the rank minimizers)
    guard the chains with short intervals.
    """
    elems = P.elements if isinstance(P, FinitePoset) else P.window(window)
    n = len(elems)
    rng = random.Random(seed)
    long_ivals = _long_intervals(P, elems, threshold)
    color_antichains = ([], [])
    colored = {}

    def add_antichain(i, chain_set):
        fresh = frozenset(e for e in chain_set if e not in colored)
        if not fresh:
            return
        color_antichains[i].append(fresh)
        for e in fresh:
            colored[e] = i

    # Long intervals are bi-colored first: the enumeration order of the
    # {I_n} is free, and at window scale the hitters would otherwise
    # saturate an interval one-sided before its turn came.
    for step, (lo, hi) in enumerate(long_ivals):
        seg = interval(P, lo, hi, window=n).members
        for i in (0, 1):
            if not any(colored.get(e) == i for e in seg):
                free = sorted((e for e in seg if e not in colored), key=elems.index)
                if not free:
                    raise InductionStuck(
                        f"interval {(lo, hi)!r} fully colored one-sided", step=step
                    )
                add_antichain(i, {free[0]})
    for p in elems:
        if p not in colored:
            i = rng.randrange(2)
            add_antichain(i, {p})
        hit0 = antichain_hitter(P, p, set(colored), window=n, chain_bound=threshold - 1)
        add_antichain(0, hit0)
        hit1 = antichain_hitter(P, p, set(colored), window=n, chain_bound=threshold - 1)
        add_antichain(1, hit1)
    part = Partition(dict(colored))
    return AvoidingColoring(
        part,
        (tuple(color_antichains[0]), tuple(color_antichains[1])),
        tuple(long_ivals),
        threshold,
    )


def check_avoiding(P, coloring, window=None):
    """Validator for build_avoiding_partition output.

    Confirms the antichain decomposition, that every long-chain interval
    meets both colors, and that no initial-interval chain of threshold
    length is monochromatic.
    """
    elems = P.elements if isinstance(P, FinitePoset) else P.window(window)
    part = coloring.partition
    for i in (0, 1):
        for ac in coloring.antichains[i]:
            if not P.is_antichain(ac):
                return False, ("not-an-antichain", i, ac)
            for e in ac:
                if part.assignment[e] != i:
                    return False, ("color-mismatch", i, e)
    cover = greedy_antichain_cover(P, elems)
    if len(cover) > len(elems):
        return False, ("antichain-cover", len(cover))
    for lo, hi in coloring.long_intervals:
        seg = interval(P, lo, hi, window=len(elems)).members
        seen = {part.assignment[e] for e in seg}
        if seen != {0, 1}:
            return False, ("one-sided-long-interval", (lo, hi))
    witness = find_homogeneous_chain(P, part, coloring.threshold, window=len(elems))
    if witness is not None:
        return False, ("homogeneous-chain", witness.chain)
    return True, None
