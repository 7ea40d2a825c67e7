"""Text form of words and relators.

A lowercase ASCII letter is a generator and the matching uppercase letter is
its inverse; ``xN`` / ``XN`` name generator ``N`` directly. Square brackets
wrap a conjugacy class. Relators are separated by whitespace; inside
brackets whitespace is ignored. ``abA [abab]`` is the element ``a b a^-1``
and the class of ``(ab)^2``.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .errors import ParseError, TrivialRelatorError
from .words import ConjClass, Element, Relator, Word, reduce


def _parse_letters(text: str, offset: int = 0) -> List[int]:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if not ("a" <= ch <= "z" or "A" <= ch <= "Z"):
            raise ParseError(f"unknown character {ch!r} at position {offset + i}")
        sign = 1 if ch.islower() else -1
        if ch in "xX" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            gen = int(text[i + 1:j])
            i = j
        else:
            gen = ord(ch.lower()) - ord("a")
            i += 1
        out.append(sign * (gen + 1))
    return out


def parse_word(text: str) -> Word:
    """Parse a bare word (no brackets) and freely reduce it."""
    return reduce(_parse_letters(text))


def _split_relators(text: str) -> List[Tuple[str, int, bool]]:
    """Split into (body, offset, is_class) chunks, checking bracket balance."""
    chunks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "[":
            j = text.find("]", i + 1)
            nested = text.find("[", i + 1)
            if j < 0 or (0 <= nested < j):
                raise ParseError(f"unbalanced bracket at position {i}")
            chunks.append((text[i + 1:j], i + 1, True))
            i = j + 1
        elif ch == "]":
            raise ParseError(f"unbalanced bracket at position {i}")
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "[]":
                j += 1
            chunks.append((text[i:j], i, False))
            i = j
    return chunks


def parse_relators(text: str) -> List[Relator]:
    relators: List[Relator] = []
    for body, offset, is_class in _split_relators(text):
        letters = _parse_letters(body, offset)
        try:
            if is_class:
                relators.append(ConjClass.of(letters))
            else:
                relators.append(Element(reduce(letters)))
        except TrivialRelatorError as exc:
            kind = "class" if is_class else "element"
            raise ParseError(
                f"trivial {kind} {body.strip()!r} at position {offset}"
            ) from exc
    return relators


def parse_input(text: str, rank: int | None = None) -> Tuple[int, List[Relator]]:
    """Parse a relator list and infer the rank.

    The inferred rank is one more than the largest generator id mentioned;
    an explicit ``rank`` may raise it but not lower it.
    """
    relators = parse_relators(text)
    mentioned = max((abs(x) for r in relators for x in r.letters), default=0)
    if rank is None:
        rank = max(mentioned, 1)
    elif rank < mentioned:
        raise ParseError(
            f"rank {rank} is smaller than the mentioned generator count {mentioned}"
        )
    elif rank < 1:
        raise ParseError("rank must be at least 1")
    return rank, relators


def default_name(gen: int) -> str:
    return chr(ord("a") + gen) if gen < 26 else f"x{gen}"


def format_letter(x: int, names: Sequence[str] | None = None) -> str:
    g = abs(x) - 1
    name = names[g] if names is not None else default_name(g)
    return name if x > 0 else name[0].upper() + name[1:]


def format_word(w: Sequence[int], names: Sequence[str] | None = None) -> str:
    """Print a word; the default names re-parse to the same word."""
    return "".join(format_letter(x, names) for x in w)


def format_relator(r: Relator, names: Sequence[str] | None = None) -> str:
    body = format_word(r.letters, names)
    return f"[{body}]" if isinstance(r, ConjClass) else body


def format_relators(rs: Sequence[Relator], names: Sequence[str] | None = None) -> str:
    return " ".join(format_relator(r, names) for r in rs)

