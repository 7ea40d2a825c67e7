"""Whitehead transforms of a basis and the rewriting they induce."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .errors import PreconditionError
from .grammar import format_letter, format_word
from .words import (
    BasisState,
    Relator,
    Word,
    letter_key,
    primed,
    substitute,
    substitute_relator,
)


@dataclass(frozen=True)
class WhiteheadTransform:
    """The basis change ``x -> (gamma x)^-1 . x . gamma(x^-1)``.

    ``gamma`` takes values in ``{1, y}``; it is stored as the set ``marked``
    of letters sent to ``y``. ``y`` and ``y^-1`` are both marked or both not.
    """

    y: int
    marked: FrozenSet[int]

    def __post_init__(self) -> None:
        if self.y == 0 or 0 in self.marked:
            raise PreconditionError("letters are nonzero ints")
        if (self.y in self.marked) != (-self.y in self.marked):
            raise PreconditionError("gamma must agree on y and y^-1")

    def image(self, gen: int) -> Word:
        """New generator ``gen'`` spelled over the old basis."""
        x = gen + 1
        w = []
        if x in self.marked:
            w.append(-self.y)
        w.append(x)
        if -x in self.marked:
            w.append(self.y)
        return _reduce3(w)

    def preimage(self, gen: int) -> Word:
        """Old generator spelled over the new basis, ``y`` read as ``y'``."""
        x = gen + 1
        w = []
        if x in self.marked:
            w.append(self.y)
        w.append(x)
        if -x in self.marked:
            w.append(-self.y)
        return _reduce3(w)

    def support(self) -> FrozenSet[int]:
        return frozenset(abs(v) - 1 for v in self.marked) | {abs(self.y) - 1}

    def images(self, rank: int) -> Dict[int, Word]:
        return {g: self.image(g) for g in range(rank)}

    def inverse_images(self, rank: int) -> Dict[int, Word]:
        return {g: self.preimage(g) for g in range(rank)}

    def changed(self, rank: int) -> List[int]:
        return [g for g in range(rank) if self.image(g) != (g + 1,)]

    def is_identity(self) -> bool:
        return all(self.image(abs(v) - 1) == (abs(v),) for v in self.marked)

    def rewrite(self, w: Sequence[int]) -> Word:
        """Spell a word over the old basis in the new one."""
        rank = max((abs(x) for x in w), default=0)
        rank = max(rank, max((abs(v) for v in self.marked), default=0), abs(self.y))
        return substitute(w, self.inverse_images(rank))

    def to_dict(self) -> dict:
        return {
            "y": format_letter(self.y),
            "marked": [format_letter(v) for v in sorted(self.marked, key=letter_key)],
            "images": {
                format_letter(g + 1): format_word(self.image(g))
                for g in sorted(self.support())
                if self.image(g) != (g + 1,)
            },
        }


def _reduce3(w: List[int]) -> Word:
    # y^-1 y y and friends: at most two cancellations in a length-3 word
    out: List[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def all_letters(rank: int) -> List[int]:
    """``a, A, b, B, ...`` in the deterministic letter order."""
    return [s * (g + 1) for g in range(rank) for s in (1, -1)]


def enumerate_transforms(rank: int | BasisState) -> Iterator[WhiteheadTransform]:
    """Every ``(y, gamma)`` pair exactly once.

    For each of the ``2 * rank`` choices of ``y`` there is one shared choice
    on ``{y, y^-1}`` and a free choice on each of the other ``2 * (rank - 1)``
    letters, so ``2 * rank * 2 * 4 ** (rank - 1)`` transforms in total.
    """
    if isinstance(rank, BasisState):
        rank = rank.rank
    if rank < 1:
        raise PreconditionError("rank must be at least 1")
    for y in all_letters(rank):
        others = [v for v in all_letters(rank) if abs(v) != abs(y)]
        for shared in (False, True):
            base = {y, -y} if shared else set()
            for bits in product((False, True), repeat=len(others)):
                marked = base | {v for v, b in zip(others, bits) if b}
                yield WhiteheadTransform(y, frozenset(marked))


def apply_transform(
    basis: BasisState, t: WhiteheadTransform, relators: Sequence[Relator]
) -> Tuple[BasisState, List[Relator]]:
    """Move to the transformed basis and rewrite ``relators`` over it."""
    rank = basis.rank
    if any(abs(v) > rank for v in t.marked) or abs(t.y) > rank:
        raise PreconditionError("transform mentions a generator outside the basis")
    images = t.images(rank)
    inverse = t.inverse_images(rank)
    changed = set(t.changed(rank))
    new_basis = BasisState(
        rank,
        tuple(primed(n) if g in changed else n for g, n in enumerate(basis.names)),
        tuple(
            substitute(images[g], basis.over_original) if g in changed else basis.over_original[g]
            for g in range(rank)
        ),
        tuple(substitute(w, inverse) for w in basis.original_over_current),
    )
    return new_basis, [substitute_relator(r, inverse) for r in relators]


def compose_images(rank: int, transforms: Sequence[WhiteheadTransform]) -> Dict[int, Word]:
    """Images of the original generators after applying ``transforms`` in
    order, i.e. the automorphism sending each generator to the last basis's
    corresponding generator, spelled over the original basis."""
    basis = BasisState.identity(rank)
    for t in transforms:
        basis, _ = apply_transform(basis, t, [])
    return dict(enumerate(basis.over_original))
