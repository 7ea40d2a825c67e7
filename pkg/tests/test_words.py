import pytest
from hypothesis import given, strategies as st

from oracles import cyclic_core, free_reduce, min_rotation
from whitehead.errors import BasisMismatchError, TrivialRelatorError
from whitehead.grammar import parse_word
from whitehead.transforms import WhiteheadTransform, apply_transform
from whitehead.words import (
    BasisState,
    ConjClass,
    CyclicWord,
    Element,
    canonical_rotation,
    cyclically_reduce,
    inverse,
    is_cyclically_reduced,
    letter,
    primed,
    reduce,
    substitute,
    x_length,
    x_support,
)

a, A, b, B, c = 1, -1, 2, -2, 3

letters3 = st.sampled_from([1, -1, 2, -2, 3, -3])
raw_words = st.lists(letters3, max_size=30)
reduced_words = raw_words.map(reduce)


def test_letter_encoding():
    assert letter(0) == a
    assert letter(1, -1) == B
    with pytest.raises(ValueError):
        letter(0, 2)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ((a, A, b), (b,)),
        ((), ()),
        ((a, b, B, A, a), (a,)),
    ],
)
def test_reduce_examples(raw, expected):
    assert reduce(raw) == expected


@given(raw_words)
def test_reduce_matches_pairwise_deletion(w):
    assert reduce(w) == free_reduce(w)


@given(raw_words)
def test_reduce_idempotent(w):
    assert reduce(reduce(w)) == reduce(w)


@given(reduced_words)
def test_word_times_inverse_is_trivial(w):
    assert reduce(w + inverse(w)) == ()


@pytest.mark.parametrize(
    "word, core, conj",
    [
        ("baB", "a", "b"),
        ("abAB", "abAB", ""),
        ("Aba", "b", "A"),
    ],
)
def test_cyclically_reduce_examples(word, core, conj):
    got_core, got_conj = cyclically_reduce(parse_word(word))
    assert got_core == CyclicWord.of(parse_word(core))
    assert got_conj == parse_word(conj)


def test_cyclically_reduce_trivial():
    assert cyclically_reduce(()) == (None, ())


@given(reduced_words)
def test_cyclically_reduce_round_trip(w):
    core, conj = cyclically_reduce(w)
    if core is None:
        assert w == ()
        return
    # the stored core is a rotation; undo the rotation through the conjugator
    stripped = cyclic_core(w)
    assert canonical_rotation(stripped) == core.letters
    assert reduce(conj + stripped + inverse(conj)) == w
    assert is_cyclically_reduced(core.letters)


@given(st.lists(letters3, min_size=1, max_size=12).map(reduce).filter(lambda w: is_cyclically_reduced(w) and w))
def test_canonical_rotation_matches_brute_force(w):
    assert canonical_rotation(w) == min_rotation(w)
    for s in range(len(w)):
        assert CyclicWord.of(w[s:] + w[:s]) == CyclicWord.of(w)


@pytest.mark.parametrize(
    "r, n",
    [
        (Element(parse_word("abA")), 3),
        (ConjClass.of(parse_word("abab")), 4),
        (Element(parse_word("a")), 1),
    ],
)
def test_x_length_examples(r, n):
    assert x_length(r) == n


@pytest.mark.parametrize(
    "r, support",
    [
        (Element(parse_word("abA")), {0, 1}),
        (ConjClass.of(parse_word("aa")), {0}),
        (Element(parse_word("B")), {1}),
    ],
)
def test_x_support_examples(r, support):
    assert x_support(r) == support


@given(reduced_words.filter(bool))
def test_class_length_at_most_element_length(w):
    e, k = Element(w), ConjClass.of(w)
    assert x_length(k) <= x_length(e)
    assert (x_length(k) == x_length(e)) == is_cyclically_reduced(w)


def test_trivial_relators_rejected():
    with pytest.raises(TrivialRelatorError):
        Element((a, A))
    with pytest.raises(TrivialRelatorError):
        ConjClass.of((b, a, A, B))


def test_inverse_classes_are_distinct():
    assert ConjClass.of((a, b)) != ConjClass.of((B, A))


def test_substitute_examples():
    assert substitute((a, b), {0: (a,), 1: (b, a)}) == (a, b, a)
    # generator 2 plays b'
    s = {0: (a,), 1: (c, A)}
    assert substitute((a, b, a, b), s) == (a, c, c, A)
    w = (a, b, A, B, B)
    assert substitute(w, {0: (a,), 1: (b,)}) == w


def test_substitute_unknown_generator():
    with pytest.raises(BasisMismatchError):
        substitute((a, c), {0: (a,), 1: (b,)})


@given(reduced_words, reduced_words)
def test_substitute_is_homomorphic(u, v):
    s = {0: (a, b), 1: (B,), 2: (c, a, c)}
    assert substitute(reduce(u + v), s) == reduce(substitute(u, s) + substitute(v, s))


def test_identity_basis():
    X = BasisState.identity(3)
    assert X.names == ("a", "b", "c")
    assert X.check_inverse_pair()
    assert BasisState.identity(27).names[26] == "x26"


def test_basis_inverse_pair_after_transform():
    X = BasisState.identity(2)
    X2, _ = apply_transform(X, WhiteheadTransform(a, frozenset({B})), [])
    assert X2.over_original == ((a,), (b, a))
    assert X2.original_over_current == ((a,), (b, A))
    assert X2.names == ("a", "b'")
    assert X2.check_inverse_pair()


def test_primed_names():
    names = ["b"]
    for _ in range(5):
        names.append(primed(names[-1]))
    assert names == ["b", "b'", "b''", "b'''", "b'4", "b'5"]
