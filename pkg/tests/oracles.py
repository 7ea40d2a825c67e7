"""Brute-force reference implementations used only by the tests.

Nothing here calls into the production code paths it is used to check.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

import numpy as np


def bipartition_cutvertices(vertices: Iterable[int], edges: Iterable[Tuple[int, int]]) -> Set[int]:
    """Vertices ``v`` such that ``V - {v}`` splits into two nonempty parts
    with no edge between them, found by trying every split."""
    verts = sorted(set(vertices))
    n = len(verts)
    if n < 3:
        return set()
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[w]) for u, w in edges]
    masks = np.arange(1 << n, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    full = (1 << n) - 1
    out = set()
    for v in range(n):
        keep = [(a, b) for a, b in edges if v not in (a, b)]
        rest = full & ~(1 << v)
        valid = (~bits[:, v]) & (masks != 0) & (masks != rest)
        if keep:
            eu = np.array([a for a, _ in keep])
            ew = np.array([b for _, b in keep])
            crossing = (bits[:, eu] != bits[:, ew]).any(axis=1)
        else:
            crossing = np.zeros(len(masks), dtype=bool)
        if (valid & ~crossing).any():
            out.add(verts[v])
    return out


def set_partitions(items: Sequence[int]):
    """Every partition of ``items`` as a list of lists."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def finest_respecting_partition(rank: int, supports: Iterable[Iterable[int]]) -> FrozenSet[FrozenSet[int]]:
    """Enumerate all partitions, keep those respecting the supports, and
    return the one refining all the others."""
    supports = [set(s) for s in supports]
    ok = []
    for part in set_partitions(range(rank)):
        blocks = [frozenset(b) for b in part]
        if all(any(s <= b for b in blocks) for s in supports):
            ok.append(frozenset(blocks))
    finest = [
        p for p in ok
        if all(all(any(b <= c for c in q) for b in p) for q in ok)
    ]
    assert len(finest) == 1
    return finest[0]


def free_reduce(seq: Sequence[int]) -> Tuple[int, ...]:
    """Repeatedly delete the leftmost cancelling pair."""
    s = list(seq)
    changed = True
    while changed:
        changed = False
        for i in range(len(s) - 1):
            if s[i] == -s[i + 1]:
                del s[i:i + 2]
                changed = True
                break
    return tuple(s)


def cyclic_core(seq: Sequence[int]) -> Tuple[int, ...]:
    s = list(free_reduce(seq))
    while len(s) >= 2 and s[0] == -s[-1]:
        s = s[1:-1]
    return tuple(s)


def min_rotation(seq: Sequence[int]) -> Tuple[int, ...]:
    key = lambda x: (abs(x), x < 0)
    rots = [tuple(seq[i:]) + tuple(seq[:i]) for i in range(len(seq))]
    return min(rots, key=lambda r: [key(x) for x in r])


def class_turns_via_square(letters: Sequence[int]) -> Set[FrozenSet[int]]:
    """Turns of a cyclic word read off the inner turns of ``w . w``."""
    ww = list(letters) + list(letters)
    return {frozenset((-ww[i], ww[i + 1])) for i in range(len(letters))}


def element_turns(letters: Sequence[int]) -> Set[FrozenSet[int]]:
    padded = [0] + list(letters) + [0]
    return {frozenset((-padded[i], padded[i + 1])) for i in range(len(padded) - 1)}


def gamma_images(rank: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """Image tuples of every ``(y, gamma)`` with gamma any map on letters
    into ``{1, y}`` agreeing on ``y`` and ``y^-1``."""
    letters = [s * (g + 1) for g in range(rank) for s in (1, -1)]
    out = []
    for y in letters:
        for choice in product((0, 1), repeat=len(letters)):
            gamma = dict(zip(letters, choice))
            if gamma[y] != gamma[-y]:
                continue
            imgs = []
            for g in range(rank):
                x = g + 1
                w = ([-y] if gamma[x] else []) + [x] + ([y] if gamma[-x] else [])
                imgs.append(free_reduce(w))
            out.append(tuple(imgs))
    return out


def _expand(seq: Sequence[int], images: Dict[int, Sequence[int]]) -> Tuple[int, ...]:
    out: List[int] = []
    for x in seq:
        img = list(images[abs(x)])
        if x < 0:
            img = [-v for v in reversed(img)]
        out.extend(img)
    return free_reduce(out)


def _inverse_gamma_images(rank: int):
    """Per ``(y, gamma)``, the map old generator -> word over new basis."""
    letters = [s * (g + 1) for g in range(rank) for s in (1, -1)]
    seen = set()
    for y in letters:
        for choice in product((0, 1), repeat=len(letters)):
            gamma = dict(zip(letters, choice))
            if gamma[y] != gamma[-y]:
                continue
            inv = {}
            for g in range(rank):
                x = g + 1
                w = ([y] if gamma[x] else []) + [x] + ([-y] if gamma[-x] else [])
                inv[x] = free_reduce(w)
            key = tuple(sorted(inv.items()))
            if key not in seen:
                seen.add(key)
                yield inv


def relator_length(seq: Sequence[int], is_class: bool) -> int:
    return len(cyclic_core(seq) if is_class else free_reduce(seq))


def exhaustive_search(
    rank: int, relators: Sequence[Tuple[Tuple[int, ...], bool]], depth: int
) -> Tuple[int, List[tuple]]:
    """Least total length reachable by at most ``depth`` Whitehead
    transforms, searching every sequence breadth first, and every reached
    state of that length."""
    inverses = list(_inverse_gamma_images(rank))
    start = tuple((min_rotation(cyclic_core(w)) if c else free_reduce(w), c) for w, c in relators)
    size = lambda st: sum(len(w) for w, _ in st)
    frontier = {start}
    seen = {start}
    for _ in range(depth):
        nxt = set()
        for state in frontier:
            for inv in inverses:
                new = tuple(
                    ((min_rotation(cyclic_core(_expand(w, inv))) if c else _expand(w, inv)), c)
                    for w, c in state
                )
                if new not in seen:
                    seen.add(new)
                    nxt.add(new)
        frontier = nxt
    best = min(size(st) for st in seen)
    return best, [st for st in seen if size(st) == best]


def exhaustive_min_length(
    rank: int, relators: Sequence[Tuple[Tuple[int, ...], bool]], depth: int
) -> int:
    return exhaustive_search(rank, relators, depth)[0]
