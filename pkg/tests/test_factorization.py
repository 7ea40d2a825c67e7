import json
import random

import pytest
from hypothesis import given, strategies as st

from oracles import finest_respecting_partition
from whitehead.errors import PreconditionError
from whitehead.factorization import Partition, allot, assemble_report, finest_partition, index_partition, is_atom
from whitehead.grammar import parse_relators
from whitehead.transforms import WhiteheadTransform, apply_transform
from whitehead.words import BasisState, ConjClass

A_, B_, C_ = 0, 1, 2


def blocks(p):
    return {frozenset(b) for b in p.blocks}


@pytest.mark.parametrize(
    "rank, supports, expected",
    [
        (3, [{A_, B_}], [{A_, B_}, {C_}]),
        (3, [{A_, B_}, {B_, C_}], [{A_, B_, C_}]),
        (2, [], [{A_}, {B_}]),
    ],
)
def test_finest_partition_examples(rank, supports, expected):
    assert blocks(finest_partition(rank, supports)) == {frozenset(b) for b in expected}


support_sets = st.integers(1, 5).flatmap(
    lambda r: st.tuples(st.just(r), st.lists(st.sets(st.integers(0, r - 1), min_size=1), max_size=6))
)


@given(support_sets)
def test_finest_partition_matches_enumeration(case):
    rank, supports = case
    assert blocks(finest_partition(rank, supports)) == finest_respecting_partition(rank, supports)


@given(support_sets, st.randoms())
def test_finest_partition_order_and_duplicates(case, rnd):
    rank, supports = case
    shuffled = supports + supports[:2]
    rnd.shuffle(shuffled)
    assert finest_partition(rank, shuffled) == finest_partition(rank, supports)


def test_partition_block_ids_are_least_generators():
    p = finest_partition(4, [{1, 3}])
    assert p.block_ids() == [0, 1, 2]
    assert p.block_of(3) == 1


def test_partition_validation():
    with pytest.raises(PreconditionError):
        Partition((frozenset({0, 1}), frozenset({1})))
    with pytest.raises(PreconditionError):
        Partition((frozenset({0}), frozenset({2})))


def test_allot_examples():
    rels = parse_relators("ab c")
    p = finest_partition(3, [{0, 1}])
    assert allot(rels, p) == (0, 2)
    assert allot([], p) == ()
    with pytest.raises(PreconditionError, match="straddling"):
        allot(parse_relators("ab"), finest_partition(2, []))


@given(st.integers(1, 5), st.randoms())
def test_allot_fibers_partition_relators(rank, rnd):
    rels = parse_relators(" ".join(
        "".join(chr(97 + rnd.randrange(rank)) for _ in range(rnd.randint(1, 3)))
        for _ in range(rnd.randint(0, 5))
    ))
    p = finest_partition(rank, [{abs(x) - 1 for x in r.letters} for r in rels])
    a = allot(rels, p)
    parts = index_partition(a)
    assert set().union(*parts) == set(range(len(rels))) if rels else parts == frozenset()
    for i, blk in enumerate(a):
        assert {abs(x) - 1 for x in rels[i].letters} <= p.block(blk)


@pytest.mark.parametrize(
    "rank, text, expected",
    [(2, "ab", True), (2, "a", False), (1, "", True)],
)
def test_is_atom(rank, text, expected):
    assert is_atom(rank, parse_relators(text)) is expected


def test_assemble_report_after_abab_descent():
    X = BasisState.identity(2)
    X2, rewritten = apply_transform(X, WhiteheadTransform(1, frozenset({-2})), parse_relators("[abab]"))
    p = finest_partition(2, [{1}])
    rep = assemble_report(X2, p, allot(rewritten, p), rewritten)
    assert rep.factor_count == 2
    assert rep.rank_one_leftovers == [0]
    assert rep.relators == (ConjClass.of((1, 2, 1, 2)),)
    d = rep.to_dict()
    assert d["allotment"] == [{"relator": 0, "input": "[abab]", "block": 1, "rewritten": "[b'b']"}]
    assert d["factors"][1]["generators"] == [{"name": "b'", "over_original": "ba"}]
    json.dumps(d)


def test_assemble_report_no_relators():
    X = BasisState.identity(2)
    rep = assemble_report(X, finest_partition(2, []), (), ())
    assert rep.factor_count == 2
    assert rep.rank_one_leftovers == [0, 1]


def test_assemble_report_single_factor():
    X = BasisState.identity(2)
    rels = parse_relators("ab")
    p = finest_partition(2, [{0, 1}])
    rep = assemble_report(X, p, allot(rels, p), rels)
    assert rep.factor_count == 1
    assert rep.to_text().startswith("F = ⟨a, b⟩")


def test_unallotted_blocks_are_singletons():
    rng = random.Random(5)
    for _ in range(50):
        rank = rng.randint(1, 6)
        sup = [set(rng.sample(range(rank), rng.randint(1, rank))) for _ in range(rng.randint(0, 3))]
        p = finest_partition(rank, sup)
        used = set().union(*sup) if sup else set()
        for b in p.blocks:
            if not b & used:
                assert len(b) == 1
