"""Letters, reduced words, cyclic words and relators over a free basis.

A letter is encoded as a nonzero int: generator ``g`` (0-based) is ``g + 1``
and its inverse is ``-(g + 1)``. A word is a tuple of letters with no
adjacent cancelling pair. Everything here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Tuple, Union

from .errors import BasisMismatchError, TrivialRelatorError

Letter = int
Word = Tuple[int, ...]
Substitution = Mapping[int, Word]

EMPTY: Word = ()


def letter(gen: int, sign: int = 1) -> Letter:
    if gen < 0:
        raise ValueError(f"generator id must be non-negative, got {gen}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return sign * (gen + 1)


def gen_of(x: Letter) -> int:
    return abs(x) - 1


def sign_of(x: Letter) -> int:
    return 1 if x > 0 else -1


def letter_key(x: Letter) -> int:
    """Sort key: generator id ascending, positive before negative."""
    return 2 * (abs(x) - 1) + (x < 0)


def reduce(raw: Iterable[Letter]) -> Word:
    """Freely reduce a sequence of letters with a single stack pass."""
    out: list = []
    for x in raw:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def is_reduced(w: Sequence[Letter]) -> bool:
    return all(w[i] != -w[i - 1] for i in range(1, len(w)))


def is_cyclically_reduced(w: Sequence[Letter]) -> bool:
    return is_reduced(w) and (len(w) < 2 or w[0] != -w[-1])


def inverse(w: Sequence[Letter]) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*words: Sequence[Letter]) -> Word:
    out: list = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def least_rotation(w: Sequence[Letter]) -> int:
    """Start index of the lexicographically least rotation of ``w``.

    Two-pointer minimum-expression scan, linear time.
    """
    n = len(w)
    if n == 0:
        return 0
    keys = [letter_key(x) for x in w]
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = keys[(i + k) % n]
        b = keys[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def canonical_rotation(w: Sequence[Letter]) -> Word:
    s = least_rotation(w)
    return tuple(w[s:]) + tuple(w[:s])


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word up to rotation, stored in canonical rotation.

    Construct with :meth:`of`; the raw constructor assumes its input is
    already canonical.
    """

    letters: Word

    def __post_init__(self) -> None:
        if not self.letters:
            raise TrivialRelatorError("a cyclic word must be nonempty")

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> "CyclicWord":
        core, _ = cyclically_reduce(reduce(letters))
        if core is None:
            raise TrivialRelatorError("sequence represents the trivial class")
        return core

    def __len__(self) -> int:
        return len(self.letters)

    def rotations(self):
        w = self.letters
        for s in range(len(w)):
            yield w[s:] + w[:s]


def cyclically_reduce(w: Sequence[Letter]) -> Tuple[Union[CyclicWord, None], Word]:
    """Split a reduced word as ``conjugator . core . conjugator^-1``.

    Returns ``(None, ())`` for the trivial word.
    """
    w = tuple(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    if not w:
        return None, EMPTY
    core = w[i:j + 1]
    return CyclicWord(canonical_rotation(core)), w[:i]


@dataclass(frozen=True)
class Element:
    """A nontrivial group element, held as its reduced word."""

    word: Word

    def __post_init__(self) -> None:
        word = tuple(self.word)
        if not is_reduced(word):
            word = reduce(word)
        if not word:
            raise TrivialRelatorError("trivial element is not a valid relator")
        object.__setattr__(self, "word", word)

    @property
    def letters(self) -> Word:
        return self.word


@dataclass(frozen=True)
class ConjClass:
    """A nontrivial conjugacy class, held as a canonical cyclic word."""

    cyclic: CyclicWord

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> "ConjClass":
        return cls(CyclicWord.of(letters))

    @property
    def letters(self) -> Word:
        return self.cyclic.letters


Relator = Union[Element, ConjClass]


def x_length(r: Relator) -> int:
    return len(r.letters)


def total_length(relators: Iterable[Relator]) -> int:
    return sum(len(r.letters) for r in relators)


def x_support(r: Relator) -> frozenset:
    return frozenset(abs(x) - 1 for x in r.letters)


def substitute(w: Sequence[Letter], images: Substitution) -> Word:
    """Replace each letter ``x^e`` by ``images[x]^e`` and freely reduce."""
    out: list = []
    for x in w:
        try:
            img = images[abs(x) - 1]
        except (KeyError, IndexError):
            raise BasisMismatchError(
                f"generator {abs(x) - 1} has no image under the substitution"
            ) from None
        if x < 0:
            img = inverse(img)
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def substitute_relator(r: Relator, images: Substitution) -> Relator:
    """Image of a relator under a substitution; classes stay classes.

    Raises :class:`TrivialRelatorError` if the image is trivial, which cannot
    happen for an automorphism.
    """
    w = substitute(r.letters, images)
    if isinstance(r, Element):
        return Element(w)
    core, _ = cyclically_reduce(w)
    if core is None:
        raise TrivialRelatorError("class mapped to the trivial class")
    return ConjClass(core)


def default_names(rank: int) -> Tuple[str, ...]:
    if rank <= 26:
        return tuple(chr(ord("a") + i) for i in range(rank))
    return tuple(f"x{i}" for i in range(rank))


def primed(name: str) -> str:
    """Name for a generator replaced by a transform: one more prime.

    Past three primes the count is written out: ``b''' -> b'4 -> b'5``.
    """
    base, mark, count = name.partition("'")
    if not mark:
        return name + "'"
    k = (int(count) if count.isdigit() else len(count) + 1) + 1
    return base + ("'" * k if k <= 3 else f"'{k}")


@dataclass(frozen=True)
class BasisState:
    """A basis of the free group with its audit trail.

    ``over_original[g]`` spells current generator ``g`` over the original
    basis; ``original_over_current[g]`` spells original generator ``g`` over
    the current one. The two substitutions are mutually inverse.
    """

    rank: int
    names: Tuple[str, ...]
    over_original: Tuple[Word, ...]
    original_over_current: Tuple[Word, ...]

    @classmethod
    def identity(cls, rank: int, names: Sequence[str] | None = None) -> "BasisState":
        if rank < 0:
            raise ValueError("rank must be non-negative")
        names = tuple(names) if names is not None else default_names(rank)
        if len(names) != rank or len(set(names)) != rank:
            raise ValueError("need one distinct name per generator")
        ident = tuple((g + 1,) for g in range(rank))
        return cls(rank, names, ident, ident)

    def is_original(self) -> bool:
        return all(w == (g + 1,) for g, w in enumerate(self.over_original))

    def to_original(self, w: Sequence[Letter]) -> Word:
        return substitute(w, self.over_original)

    def from_original(self, w: Sequence[Letter]) -> Word:
        return substitute(w, self.original_over_current)

    def check_inverse_pair(self) -> bool:
        for g in range(self.rank):
            if substitute(self.over_original[g], self.original_over_current) != (g + 1,):
                return False
            if substitute(self.original_over_current[g], self.over_original) != (g + 1,):
                return False
        return True
