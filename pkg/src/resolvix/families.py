"""Set families and the filling calculus.

A family member pairs an opaque name with its trace on a finite ground
window.  Proper subsethood between members is decided by an oracle; the
default oracle is strict trace inclusion, but a family may install a
decoupled one (e.g. real-interval containment for dyadic families whose
distinct members leave equal traces on a coarse window).  Coverage is
only ever demanded on window points: that is the finite semantics of
"fills" throughout.

Genuinely self-filling families are infinite; any finite family has
oracle-minimal members that nothing fills.  Those members form the
family's *truncation frontier*, the stand-in for the descent that never
ends in the untruncated object.  Directed fill checks against explicit
targets are strict, while resolution-style operations (greedy good-pair
resolution, the dense-requirement coloring, cover/base splitting) exempt
the frontier from coverage demands, since its unfillability is an
artifact of the window and not of the family.
"""

from dataclasses import dataclass, field

from .errors import (
    ChainTooShort,
    FillFailure,
    NoCertificate,
    NotUnionClosed,
    NotWeaklySeparated,
    RequirementUnmeetable,
    ScheduleExhausted,
    TooSmall,
    Unresolvable,
)
from .partition import Partition
import random


@dataclass(frozen=True)
class NamedSet:
    """A named extent over the ground window.

    ``payload`` is opaque data for decoupled subset oracles (dyadic
    families store their real-interval endpoints there).
    """

    name: str
    points: frozenset
    payload: object = None

    def __repr__(self):
        return f"NamedSet({self.name!r}, {{{', '.join(map(repr, sorted(self.points, key=repr)))}}})"


class SetFamily:
    """An indexed sequence of named sets over a shared ground window."""

    def __init__(self, members, ground, proper_subset=None, name="family", allow_empty=False):
        self.members = tuple(members)
        self.ground = frozenset(ground)
        self.name = name
        self.proper_subset_oracle = proper_subset
        self.by_name = {}
        for m in self.members:
            if m.name in self.by_name:
                raise ValueError(f"duplicate member name {m.name!r}")
            if not m.points and not allow_empty:
                raise ValueError(f"member {m.name!r} has empty extent (pass allow_empty to keep it)")
            if not m.points <= self.ground:
                raise ValueError(f"member {m.name!r} leaves the ground window")
            self.by_name[m.name] = m
        if proper_subset is not None:
            for a in self.members:
                for b in self.members:
                    if a is not b and proper_subset(a, b) and not a.points <= b.points:
                        raise ValueError(
                            f"subset oracle inconsistent with membership: {a.name!r} under {b.name!r}"
                        )

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, name):
        return name in self.by_name

    def names(self):
        return tuple(m.name for m in self.members)

    def index(self, name):
        for i, m in enumerate(self.members):
            if m.name == name:
                return i
        raise KeyError(name)

    def proper_subset(self, a, b):
        if self.proper_subset_oracle is not None:
            return self.proper_subset_oracle(a, b)
        return a.points < b.points

    def subfamily(self, names, name=None):
        wanted = set(names)
        return SetFamily(
            [m for m in self.members if m.name in wanted],
            self.ground,
            proper_subset=self.proper_subset_oracle,
            name=name or self.name,
            allow_empty=True,
        )

    def union_with(self, other, name=None):
        extra = [m for m in other.members if m.name not in self.by_name]
        return SetFamily(
            list(self.members) + extra,
            self.ground | other.ground,
            proper_subset=self.proper_subset_oracle,
            name=name or self.name,
            allow_empty=True,
        )

    def minus(self, names, name=None):
        drop = set(names)
        return self.subfamily([n for n in self.names() if n not in drop], name=name)


def empty_family(ground, like=None, name="empty"):
    oracle = like.proper_subset_oracle if like is not None else None
    return SetFamily([], ground, proper_subset=oracle, name=name)


@dataclass(frozen=True)
class FillCertificate:
    target: str
    witnesses: tuple
    coverage: frozenset


@dataclass(frozen=True)
class FillResult:
    ok: bool
    certificates: tuple = ()
    failure: tuple = None  # (target name, uncovered point)

    def __bool__(self):
        return self.ok


def _window(points, family):
    return family.ground if points is None else frozenset(points)


def frontier(B):
    """Names of the oracle-minimal members: the truncation frontier."""
    return frozenset(
        U.name
        for U in B.members
        if not any(V.name != U.name and A_proper(B, B, V, U) for V in B.members)
    )


def fills(A, B, window=None, exempt=()):
    """Does A fill B: every member of B is the union of its proper subsets in A.

    Returns one certificate per member of B, or the first (target, point)
    pair witnessing an uncovered window point.  Members named in
    ``exempt`` (typically a truncation frontier) are skipped.
    """
    win = _window(window, B)
    exempt = set(exempt)
    certs = []
    for U in B.members:
        if U.name in exempt:
            continue
        witnesses = [V for V in A.members if V.name != U.name and A_proper(A, B, V, U)]
        coverage = frozenset().union(*(V.points for V in witnesses)) if witnesses else frozenset()
        coverage &= win
        need = U.points & win
        if not need <= coverage:
            missing = min(need - coverage, key=repr)
            return FillResult(False, tuple(certs), failure=(U.name, missing))
        certs.append(FillCertificate(U.name, tuple(V.name for V in witnesses), coverage))
    return FillResult(True, tuple(certs))


def A_proper(A, B, V, U):
    """V (from A) properly below U (from B), preferring an installed oracle."""
    oracle = A.proper_subset_oracle or B.proper_subset_oracle
    if oracle is not None:
        return oracle(V, U)
    return V.points < U.points


def fills_exhaustive(A, B, window=None, exempt=()):
    """Brute-force oracle for fills: search all witness subfamilies.

    Equivalent to the definition-based check; kept independent for
    certificate cross-validation in tests.
    """
    win = _window(window, B)
    exempt = set(exempt)
    for U in B.members:
        if U.name in exempt:
            continue
        candidates = [V for V in A.members if V.name != U.name and A_proper(A, B, V, U)]
        need = U.points & win
        found = False
        for mask in range(1 << len(candidates)):
            chosen = [candidates[i] for i in range(len(candidates)) if mask >> i & 1]
            cov = frozenset().union(*(V.points for V in chosen)) if chosen else frozenset()
            if need <= (cov & win):
                found = True
                break
        if not found:
            return False
    return True


@dataclass(frozen=True)
class GoodPair:
    left: SetFamily
    right: SetFamily
    left_fills_right: tuple
    right_fills_left: tuple


def certify_good_pair(left, right, window=None, exempt=()):
    """Check disjointness and mutual filling; return a GoodPair or raise."""
    overlap = set(left.names()) & set(right.names())
    if overlap:
        raise FillFailure(f"sides are not disjoint: {sorted(overlap)}")
    lr = fills(left, right, window, exempt=exempt)
    if not lr:
        raise FillFailure("left does not fill right", target=lr.failure[0], point=lr.failure[1])
    rl = fills(right, left, window, exempt=exempt)
    if not rl:
        raise FillFailure("right does not fill left", target=rl.failure[0], point=rl.failure[1])
    return GoodPair(left, right, lr.certificates, rl.certificates)


def weakly_increasing_subfamily(A, order=None):
    """The members whose difference from every earlier member is nonempty.

    ``order`` is a sequence of member names (defaults to family order).
    The union over the window is preserved.
    """
    names = list(order) if order is not None else list(A.names())
    kept = []
    for name in names:
        B = A.by_name[name]
        if all(B.points - A.by_name[prev].points for prev in kept):
            kept.append(name)
    return A.subfamily(kept)


def is_weakly_increasing(A, order=None):
    names = list(order) if order is not None else list(A.names())
    for i, later in enumerate(names):
        for earlier in names[:i]:
            if not A.by_name[later].points - A.by_name[earlier].points:
                return False
    return True


def weakly_fills(A, B, closure, window=None):
    """Regular-space filling: between closure-nested pairs of B, a
    subfamily of A squeezes in.

    ``closure`` maps a member to its closure as a point set (a NamedSet
    is also accepted).  Extensivity and monotonicity are checked on the
    members of B.
    """
    win = _window(window, B)

    def clo(U):
        c = closure(U)
        return c.points if isinstance(c, NamedSet) else frozenset(c)

    for U in B.members:
        if not (U.points & win) <= clo(U):
            raise ValueError(f"closure not extensive at {U.name!r}")
    for U in B.members:
        for V in B.members:
            if U.points <= V.points and not clo(U) <= clo(V):
                raise ValueError(f"closure not monotone at {U.name!r} <= {V.name!r}")

    certs = []
    for U in B.members:
        for V in B.members:
            if not clo(U) & win <= V.points:
                continue
            W = [Wm for Wm in A.members if Wm.points <= V.points]
            cov = frozenset().union(*(w.points for w in W)) if W else frozenset()
            if clo(U) & win <= cov:
                certs.append((U.name, V.name, tuple(w.name for w in W)))
            else:
                return FillResult(False, tuple(certs), failure=(U.name, V.name))
    return FillResult(True, tuple(certs))


def extend_fill(A, B, A2, B2, window=None, exempt=()):
    """Merge two good pairs: (A + (A2 - B), B + (B2 - A)).

    The merge is re-certified as a good pair that also fills the union of
    B2's members.
    """
    newA = A.union_with(A2.minus(B.names()))
    newB = B.union_with(B2.minus(A.names()))
    pair = certify_good_pair(newA, newB, window, exempt=exempt)
    win = _window(window, B2)
    target_points = frozenset().union(*(m.points for m in B2.members)) if len(B2) else frozenset()
    for side in (newA, newB):
        witnesses = [V for V in side.members]
        cov = frozenset().union(*(V.points for V in witnesses)) if witnesses else frozenset()
        if not (target_points & win) <= cov:
            raise FillFailure("merged pair does not cover the union of B2")
    return pair


def b_of(W, A, B, window=None):
    """A weakly increasing subfamily of B avoiding A whose union is W.

    Realizes the countable-witness construction at window scale: a greedy
    cover of W by proper subsets from B outside A (lexicographic by
    member index, each pick contributing new points), thinned to a weakly
    increasing subfamily.  The union on the window is exactly W's trace.
    """
    win = _window(window, B)
    avoid = set(A.names()) if isinstance(A, SetFamily) else set(A)
    pool = [V for V in B.members if V.name not in avoid and V.name != W.name and A_proper(B, B, V, W)]
    need = W.points & win
    chosen = []
    covered = frozenset()
    for V in pool:
        gain = (V.points & need) - covered
        if gain:
            chosen.append(V)
            covered |= V.points & need
        if need <= covered:
            break
    if not need <= covered:
        raise NoCertificate(f"{W.name!r} has no filling witness family outside the avoided side")
    sub = B.subfamily([V.name for V in chosen])
    return weakly_increasing_subfamily(sub)


@dataclass(frozen=True)
class StagedFill:
    pair: GoodPair
    stages: tuple  # per stage: (side0 names, side1 names)
    attempted: tuple
    skipped: tuple  # targets with no window certificate


def staged_filler(B, seeds, schedule_depth, block_width=4, window=None):
    """Round-robin staged construction of a good pair filling the top sets.

    The target queue starts with the inclusion-maximal members and grows
    with everything added to either side.  Per target the two sides are
    extended by witness families avoiding the opposite side; targets
    whose witnesses are exhausted at this window are recorded as skipped.
    Raises ScheduleExhausted when the depth ends with never-attempted
    targets still queued.
    """
    side0_names = list(seeds[0].names())
    side1_names = list(seeds[1].names())
    if set(side0_names) & set(side1_names):
        raise ValueError("seed sides are not disjoint")
    if schedule_depth == 0:
        return StagedFill(GoodPair(seeds[0], seeds[1], (), ()), (), (), ())

    maximal = [
        U.name
        for U in B.members
        if not any(V.name != U.name and A_proper(B, B, U, V) for V in B.members)
    ]
    queue = list(maximal)
    queued = set(queue)
    attempted = []
    skipped = []
    stages = []
    for _ in range(schedule_depth):
        block = queue[:block_width]
        queue = queue[block_width:]
        for target_name in block:
            target = B.by_name[target_name]
            attempted.append(target_name)
            try:
                add0 = b_of(target, B.subfamily(side1_names), B, window)
            except NoCertificate:
                skipped.append((target_name, 0))
                add0 = None
            if add0 is not None:
                for nm in add0.names():
                    if nm not in side0_names and nm not in side1_names:
                        side0_names.append(nm)
            try:
                add1 = b_of(target, B.subfamily(side0_names), B, window)
            except NoCertificate:
                skipped.append((target_name, 1))
                add1 = None
            if add1 is not None:
                for nm in add1.names():
                    if nm not in side1_names and nm not in side0_names:
                        side1_names.append(nm)
            for nm in side0_names + side1_names:
                if nm not in queued:
                    queued.add(nm)
                    queue.append(nm)
        stages.append((tuple(side0_names), tuple(side1_names)))
    if queue:
        raise ScheduleExhausted(
            f"{len(queue)} scheduled targets never attempted at depth {schedule_depth}", pending=queue
        )
    side0 = B.subfamily(side0_names)
    side1 = B.subfamily(side1_names)
    return StagedFill(GoodPair(side0, side1, (), ()), tuple(stages), tuple(attempted), tuple(skipped))


@dataclass(frozen=True)
class GreedyResolution:
    partition: Partition
    pair: GoodPair
    touched: tuple


def resolve_good_pair_greedy(B, local_pairs, window=None):
    """Merge per-member good pairs until both sides fill every member.

    ``local_pairs`` maps member names of B to good pairs both of whose
    sides union to that member on the window.  The truncation frontier of
    B needs no local pairs and is exempt from the final coverage check.
    """
    fringe = frontier(B)
    missing = [U.name for U in B.members if U.name not in local_pairs and U.name not in fringe]
    if missing:
        raise Unresolvable(f"no local pair for {missing[0]!r}")
    side0 = empty_family(B.ground, like=B, name="side0")
    side1 = empty_family(B.ground, like=B, name="side1")
    for U in B.members:
        if U.name in fringe:
            continue
        local = local_pairs[U.name]
        side0, side1 = _merge_pair(side0, side1, local.left, local.right)
    pair = certify_good_pair(side0, side1, window, exempt=fringe)
    for side in (pair.left, pair.right):
        res = fills(side, B, window, exempt=fringe)
        if not res:
            raise Unresolvable(
                f"merged sides do not fill {res.failure[0]!r} at point {res.failure[1]!r}"
            )
    touched = pair.left.names() + pair.right.names()
    assignment = {n: 0 for n in pair.left.names()}
    assignment.update({n: 1 for n in pair.right.names()})
    return GreedyResolution(Partition(assignment), pair, touched)


def _merge_pair(A, Bside, A2, B2):
    newA = A.union_with(A2.minus(Bside.names()))
    newB = Bside.union_with(B2.minus(A.names()))
    return newA, newB


def derive_local_pairs(B, window=None):
    """Canonical local pairs per non-frontier member, by the staged route.

    For each member the staged filler runs on the subfamily of its proper
    subsets; the resulting sides are certified as a good pair away from
    the truncation frontier.  Raises Unresolvable when a non-frontier
    member has no such pair at this window.
    """
    win = _window(window, B)
    fringe = frontier(B)
    pairs = {}
    for U in B.members:
        if U.name in fringe:
            continue
        restricted = B.subfamily(
            [U.name] + [V.name for V in B.members if V.name != U.name and A_proper(B, B, V, U)]
        )
        seeds = (empty_family(B.ground, like=B), empty_family(B.ground, like=B))
        try:
            staged = staged_filler(restricted, seeds, schedule_depth=len(restricted) + 1, window=win)
            pair = certify_good_pair(
                staged.pair.left, staged.pair.right, win, exempt=frontier(restricted)
            )
        except (NoCertificate, FillFailure, ScheduleExhausted) as exc:
            raise Unresolvable(f"no local pair derivable for {U.name!r}: {exc}") from exc
        for side in (pair.left, pair.right):
            cov = frozenset().union(*(m.points for m in side.members)) if len(side) else frozenset()
            if not (U.points & win) <= cov:
                raise Unresolvable(f"local side for {U.name!r} does not union to it")
        pairs[U.name] = pair
    return pairs


def restriction_local_pairs(B, partition, window=None):
    """Local pairs read off a both-sides-filling partition by restriction.

    For each non-frontier member the pair collects, per side, the
    partition's members properly below it.
    """
    fringe = frontier(B)
    pairs = {}
    for U in B.members:
        if U.name in fringe:
            continue
        side_names = ([], [])
        for V in B.members:
            if V.name != U.name and A_proper(B, B, V, U):
                side_names[partition.assignment[V.name]].append(V.name)
        pairs[U.name] = certify_good_pair(
            B.subfamily(side_names[0]), B.subfamily(side_names[1]), window, exempt=fringe
        )
    return pairs


@dataclass(frozen=True)
class SigmaSplit:
    partition: Partition
    blocks: dict  # (i, n) -> member names
    covers: dict  # (i, n, level member name) -> witness names


def resolve_sigma_disjoint(B, levels, window=None):
    """Split B against a sigma-disjoint level structure.

    Per level a disjoint pair of weakly increasing blocks is extracted,
    each covering every level member; blocks are pairwise disjoint across
    levels and colors.
    """
    win = _window(window, B)
    for n, level in enumerate(levels):
        exts = [m.points for m in level.members]
        for i, a in enumerate(exts):
            for b in exts[i + 1:]:
                if a & b:
                    raise ValueError(f"level {n} is not pairwise disjoint")
    used = set()
    blocks = {}
    covers = {}
    for n, level in enumerate(levels):
        for i in (0, 1):
            block = []
            for E in level.members:
                witnesses = b_of(E, B.subfamily(sorted(used)), B, win)
                for nm in witnesses.names():
                    if nm not in used:
                        block.append(nm)
                        used.add(nm)
                covers[(i, n, E.name)] = witnesses.names()
            blocks[(i, n)] = tuple(block)
    assignment = {}
    for (i, n), names in blocks.items():
        for nm in names:
            assignment[nm] = i
    return SigmaSplit(Partition(assignment), blocks, covers)


@dataclass(frozen=True)
class FinUnionPair:
    pair: GoodPair
    side_names: tuple  # (side0 names, side1 names)
    ladder_exempt: frozenset  # side members too deep for this chain window
    synthesized: dict  # (side, member, point) -> witness member name


def resolve_finite_union_closed(B, U, chain, points, window=None, check_closure_pairs=400):
    """The parity construction for union-closed families.

    ``chain`` are names of a strictly decreasing sequence inside U and
    ``points`` the separating point choices (points[n] lies in
    chain[n-1] minus chain[n]).  Side i collects the members V below U
    with chain[2k+i] <= V but chain[2k-1+i] not <= V for some k >= 1.
    Mutual-filling witnesses are synthesized as union members
    chain[2l+j] + W.  A side member hanging on the last chain links has
    fewer than two usable witness levels; those members are the chain's
    own truncation frontier and are exempt from the mutual-filling
    certificate (a longer chain resolves them).
    """
    win = _window(window, B)
    if len(chain) < 4:
        raise ChainTooShort(f"chain of length {len(chain)} is too short (need at least 4)")
    Us = [B.by_name[nm] for nm in chain]
    for a, b in zip(Us, Us[1:]):
        if not b.points < a.points:
            raise ValueError(f"chain not strictly decreasing at {a.name!r} > {b.name!r}")
    if not Us[0].points <= U.points:
        raise ValueError("chain does not start inside U")
    for n in range(1, len(chain)):
        if points[n - 1] not in Us[n - 1].points - Us[n].points:
            raise ValueError(f"separating point {n} not in chain[{n-1}] - chain[{n}]")

    _check_union_closed(B, check_closure_pairs)
    _check_t1(B, win)

    def side_of(V):
        if not V.points <= U.points:
            return None
        for i in (0, 1):
            for k in range(1, (len(chain) - i + 1) // 2):
                hi, lo = 2 * k - 1 + i, 2 * k + i
                if lo >= len(chain):
                    break
                if Us[lo].points <= V.points and not Us[hi].points <= V.points:
                    return i
        return None

    def usable_levels(V, witness_side):
        out = []
        for l in range(1, len(chain)):
            hi, lo = 2 * l - 1 + witness_side, 2 * l + witness_side
            if lo >= len(chain):
                break
            if Us[hi].points <= V.points:
                out.append(l)
        return out

    side_names = ([], [])
    for V in B.members:
        s = side_of(V)
        if s is not None:
            side_names[s].append(V.name)

    exempt = set()
    synthesized = {}
    for i in (0, 1):
        for nm in side_names[i]:
            V = B.by_name[nm]
            if len(usable_levels(V, 1 - i)) < 2:
                exempt.add(nm)
                continue
            for z in sorted(V.points & win, key=repr):
                w = _synthesize_witness(B, Us, points, V, z, 1 - i)
                synthesized[(i, nm, z)] = w

    side0 = B.subfamily(side_names[0], name="side0")
    side1 = B.subfamily(side_names[1], name="side1")
    pair = certify_good_pair(side0, side1, win, exempt=exempt)
    for i, side in enumerate((side0, side1)):
        cov = frozenset().union(*(m.points for m in side.members)) if len(side) else frozenset()
        if (U.points & win) != (cov & win):
            raise FillFailure(f"side {i} does not union to the target on the window")
    return FinUnionPair(
        pair, (tuple(side_names[0]), tuple(side_names[1])), frozenset(exempt), synthesized
    )


def _synthesize_witness(B, Us, points, V, z, want_side):
    """Find l and W in B with z in W inside V avoiding the separating
    point, so that chain[2l + want_side] union W lands on the wanted side
    inside V."""
    for l in range(1, len(Us)):
        lo = 2 * l + want_side
        hi = lo - 1
        if lo >= len(Us):
            break
        if not Us[hi].points <= V.points:
            continue
        y = points[lo - 1]  # the point of chain[lo-1] - chain[lo]
        if y == z:
            continue
        for W in B.members:
            if z in W.points and W.points <= V.points - {y}:
                for VP in B.members:
                    if VP.points == (Us[lo].points | W.points) and VP.points <= V.points:
                        return VP.name
    raise FillFailure(f"no synthesized witness for {V.name!r} at {z!r}", target=V.name, point=z)


def _check_union_closed(B, cap):
    members = list(B.members)
    traces = {m.points for m in members}
    pairs = [(a, b) for i, a in enumerate(members) for b in members[i + 1:]]
    if len(pairs) > cap:
        pairs = pairs[::max(1, len(pairs) // cap)][:cap]
    for a, b in pairs:
        if (a.points | b.points) not in traces:
            raise NotUnionClosed(f"{a.name!r} union {b.name!r} has no member with that trace")


def _check_t1(B, win):
    pts = sorted(win, key=repr)
    for x in pts:
        for y in pts:
            if x == y:
                continue
            if not any(x in m.points and y not in m.points for m in B.members):
                raise ValueError(f"T1 surrogate fails: nothing distinguishes {x!r} from {y!r}")


@dataclass(frozen=True)
class CohenResult:
    pair: GoodPair
    partition: Partition
    requirements: tuple  # ((point, member, color), witness name)


def cohen_good_pair(B_U, window=None, seed=0, exempt_frontier=False):
    """Greedy finite realization of the dense coloring requirements.

    Every (point, member, color) requirement demands a member of that
    color properly inside the target and containing the point; the greedy
    meets them in deterministic order, coloring fresh witnesses as needed
    (seed breaks ties among candidates).  With ``exempt_frontier`` the
    truncation frontier generates no requirements; without it a minimal
    member with window points is reported unmeetable.
    """
    win = _window(window, B_U)
    rng = random.Random(seed)
    fringe = frontier(B_U) if exempt_frontier else frozenset()
    coloring = {}
    met = []
    reqs = []
    for V in B_U.members:
        if V.name in fringe:
            continue
        for x in sorted(V.points & win, key=repr):
            for i in (0, 1):
                reqs.append((x, V.name, i))
    for x, vname, i in reqs:
        V = B_U.by_name[vname]
        candidates = [
            W for W in B_U.members if W.name != vname and x in W.points and A_proper(B_U, B_U, W, V)
        ]
        if not candidates:
            raise RequirementUnmeetable(
                f"no candidate witness for point {x!r} inside {vname!r}", requirement=(x, vname, i)
            )
        hit = next((W for W in candidates if coloring.get(W.name) == i), None)
        if hit is None:
            fresh = [W for W in candidates if W.name not in coloring]
            if not fresh:
                raise RequirementUnmeetable(
                    f"all witnesses for point {x!r} inside {vname!r} hold the opposite color",
                    requirement=(x, vname, i),
                )
            hit = fresh[rng.randrange(len(fresh))] if len(fresh) > 1 else fresh[0]
            coloring[hit.name] = i
        met.append(((x, vname, i), hit.name))
    part = Partition(dict(coloring))
    side0 = B_U.subfamily([n for n, c in coloring.items() if c == 0])
    side1 = B_U.subfamily([n for n, c in coloring.items() if c == 1])
    pair = certify_good_pair(side0, side1, win, exempt=frontier(B_U))
    return CohenResult(pair, part, tuple(met))


def extract_negligible(B, target_size, window=None):
    """A weakly increasing subfamily that the rest of B still fills.

    Members are scanned small-trace-first; each candidate is kept only if
    the subfamily stays weakly increasing and the complement still fills
    it on the window.
    """
    win = _window(window, B)
    order = sorted(B.members, key=lambda m: (len(m.points), B.index(m.name)))
    chosen = []
    for m in order:
        trial = chosen + [m.name]
        sub = B.subfamily(trial)
        if not is_weakly_increasing(sub, order=trial):
            continue
        rest = B.minus(trial)
        if fills(rest, sub, win):
            chosen = trial
        if len(chosen) >= target_size:
            break
    if len(chosen) < target_size:
        raise TooSmall(f"only {len(chosen)} negligible members found, wanted {target_size}")
    return B.subfamily(chosen)


def L_value(B, U, window=None):
    """Minimum witness count over fill certificates of U, by branch and bound."""
    win = _window(window, B)
    witnesses = [V for V in B.members if V.name != U.name and A_proper(B, B, V, U)]
    need = U.points & win
    total = frozenset().union(*(V.points for V in witnesses)) if witnesses else frozenset()
    if not need <= total:
        raise NoCertificate(f"{U.name!r} has no fill certificate on the window")
    best = [len(witnesses)]

    def bnb(chosen, covered, rest):
        if need <= covered:
            best[0] = min(best[0], len(chosen))
            return
        if len(chosen) + 1 >= best[0]:
            return
        if not rest:
            return
        future = covered.union(*(V.points for V in rest))
        if not need <= future:
            return
        head, tail = rest[0], rest[1:]
        bnb(chosen + [head], covered | head.points, tail)
        bnb(chosen, covered, tail)

    ordered = sorted(witnesses, key=lambda V: -len(V.points & need))
    bnb([], frozenset(), ordered)
    return best[0]


def weak_separation_partition(B, assignment, window=None):
    """Per-point disjoint subfamilies from a weakly separating assignment.

    ``assignment`` maps window points to their assigned neighborhoods
    (NamedSets or point sets); the weak-separation clause is checked
    exhaustively first.
    """
    win = _window(window, B)

    def ext(x):
        u = assignment[x]
        return u.points if isinstance(u, NamedSet) else frozenset(u)

    pts = sorted((x for x in win if x in assignment), key=repr)
    for x in pts:
        if x not in ext(x):
            raise ValueError(f"assignment at {x!r} does not contain the point")
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if x in ext(y) and y in ext(x):
                raise NotWeaklySeparated(f"pair {x!r}, {y!r} violates weak separation", pair=(x, y))
    out = {}
    for x in pts:
        names = [m.name for m in B.members if x in m.points and m.points <= ext(x)]
        out[x] = B.subfamily(names, name=f"at:{x!r}")
    seen = {}
    for x, fam in out.items():
        for nm in fam.names():
            if nm in seen:
                raise NotWeaklySeparated(
                    f"member {nm!r} lands at both {seen[nm]!r} and {x!r}", pair=(seen[nm], x)
                )
            seen[nm] = x
    return out


def split_cover_and_base(B, window=None):
    """Split B into a weakly increasing cover and a remainder that still
    fills B away from the truncation frontier."""
    win = _window(window, B)
    cover = weakly_increasing_subfamily(B)
    cov = frozenset().union(*(m.points for m in cover.members)) if len(cover) else frozenset()
    if not win <= cov:
        raise FillFailure("family does not cover the window")
    rest = B.minus(cover.names())
    res = fills(rest, B, win, exempt=frontier(B))
    if not res:
        raise FillFailure(
            "remainder no longer fills the family", target=res.failure[0], point=res.failure[1]
        )
    return cover, rest
