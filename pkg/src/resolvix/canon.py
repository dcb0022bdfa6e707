"""Canonical fingerprints and exhaustive generation of small posets.

Canonical forms use invariant refinement (iterated up/down degree
profiles) followed by brute permutation inside the remaining blocks,
which is cheap at the sizes used here (<= 8 elements).  Generation works
upward: every poset on n+1 elements arises from a poset on n elements by
adding a new maximal element above some order ideal.
"""

from itertools import permutations


def _profiles(n, lt):
    prof = [(sum(lt[i][j] for j in range(n)), sum(lt[j][i] for j in range(n))) for i in range(n)]
    for _ in range(n):
        nxt = []
        for i in range(n):
            ups = sorted(prof[j] for j in range(n) if lt[i][j])
            dns = sorted(prof[j] for j in range(n) if lt[j][i])
            nxt.append((prof[i], tuple(ups), tuple(dns)))
        if len(set(nxt)) == len(set(prof)):
            prof = nxt
            break
        prof = nxt
    return prof


def canonical_form(n, strict_pairs):
    """Canonical encoding (frozenset of index pairs) of a strict order."""
    lt = [[False] * n for _ in range(n)]
    for a, b in strict_pairs:
        lt[a][b] = True
    prof = _profiles(n, lt)
    order = sorted(range(n), key=lambda i: (repr(prof[i]), i))
    blocks = []
    start = 0
    for i in range(1, n + 1):
        if i == n or repr(prof[order[i]]) != repr(prof[order[start]]):
            blocks.append(order[start:i])
            start = i
    best = None
    for perm in _block_perms(blocks):
        pos = {e: k for k, e in enumerate(perm)}
        enc = frozenset((pos[a], pos[b]) for a in range(n) for b in range(n) if lt[a][b])
        key = tuple(sorted(enc))
        if best is None or key < best[0]:
            best = (key, enc)
    return best[1] if best is not None else frozenset()


def _block_perms(blocks):
    if not blocks:
        yield ()
        return
    head, rest = blocks[0], blocks[1:]
    for hp in permutations(head):
        for rp in _block_perms(rest):
            yield tuple(hp) + rp


def _ideals(n, lt):
    """All down-closed subsets, as bitmasks."""
    below = [0] * n
    for e in range(n):
        for d in range(n):
            if lt[d][e]:
                below[e] |= 1 << d
    return {
        m
        for m in range(1 << n)
        if all(not (m >> e) & 1 or (m & below[e]) == below[e] for e in range(n))
    }


def all_posets_upto_iso(max_n):
    """Yield (n, strict_pairs) for one representative of every poset with
    1..max_n elements."""
    reps = {1: [frozenset()]}
    yield (1, frozenset())
    for n in range(1, max_n):
        seen = set()
        nxt = []
        for pairs in reps[n]:
            lt = [[False] * n for _ in range(n)]
            for a, b in pairs:
                lt[a][b] = True
            for ideal in _ideals(n, lt):
                below = {d for d in range(n) if ideal & (1 << d)}
                new_pairs = set(pairs)
                for d in below:
                    new_pairs.add((d, n))
                canon = canonical_form(n + 1, new_pairs)
                if canon not in seen:
                    seen.add(canon)
                    nxt.append(frozenset(canon))
                    yield (n + 1, frozenset(canon))
        reps[n + 1] = nxt
