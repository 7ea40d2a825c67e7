"""The cutvertex algorithm, the minimizing algorithm and the sub-basis test."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .descent import (
    DescentPlan,
    count_split_turns,
    find_descent,
    plan_to_transform,
    validate_plan,
)
from .errors import InvariantError, PreconditionError
from .factorization import (
    FactorizationReport,
    Partition,
    allot,
    assemble_report,
    fibers,
    finest_partition,
)
from .graph import BASEPOINT, WhiteheadGraph, build_graph, cutvertex_scan, vertex_key, vertex_label
from .transforms import WhiteheadTransform, apply_transform, enumerate_transforms
from .words import (
    BasisState,
    ConjClass,
    Element,
    Relator,
    Word,
    substitute,
    substitute_relator,
    total_length,
    x_support,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceStep:
    block: int
    cutvertex: int
    plan: DescentPlan
    transform: WhiteheadTransform
    length_before: int
    length_after: int
    split_turns: int

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        return {
            "block": self.block,
            "cutvertex": vertex_label(self.cutvertex),
            "plan": self.plan.to_dict(),
            "transform": self.transform.to_dict(),
            "length_before": self.length_before,
            "length_after": self.length_after,
            "split_turns": self.split_turns,
        }


RunTrace = Tuple[TraceStep, ...]

# (block id, graph, legal cutvertices in scan order)
Candidate = Tuple[int, WhiteheadGraph, List[int]]


class LexStrategy:
    """Smallest block id, then the smallest vertex in vertex order."""

    name = "lex"

    def choose(self, candidates: Sequence[Candidate]) -> Tuple[int, int]:
        block, _, vs = min(candidates, key=lambda c: c[0])
        return block, min(vs, key=vertex_key)


class FirstFoundStrategy:
    """The first cutvertex the DFS certifies, in the last block that has one."""

    name = "first"

    def choose(self, candidates: Sequence[Candidate]) -> Tuple[int, int]:
        block, _, vs = max(candidates, key=lambda c: c[0])
        return block, vs[0]


class RandomStrategy:
    name = "random"

    def __init__(self, seed: int | None = None):
        self.seed = seed
        self.rng = random.Random(seed)

    def choose(self, candidates: Sequence[Candidate]) -> Tuple[int, int]:
        options = [(b, v) for b, _, vs in candidates for v in sorted(vs, key=vertex_key)]
        return self.rng.choice(options)


Strategy = Union[LexStrategy, FirstFoundStrategy, RandomStrategy]


def make_strategy(name: str = "lex", seed: int | None = None) -> Strategy:
    if name == "lex":
        return LexStrategy()
    if name == "first":
        return FirstFoundStrategy()
    if name == "random":
        return RandomStrategy(seed)
    raise ValueError(f"unknown strategy {name!r}")


def _check_over(basis: BasisState, relators: Sequence[Relator]) -> None:
    for i, r in enumerate(relators):
        if not isinstance(r, (Element, ConjClass)):
            raise PreconditionError(f"relator {i} is not an Element or ConjClass")
        if any(abs(x) > basis.rank for x in r.letters):
            raise PreconditionError(f"relator {i} mentions a generator outside rank {basis.rank}")


def block_candidates(
    basis: BasisState, relators: Sequence[Relator]
) -> Tuple[Partition, Tuple[int, ...], List[Candidate]]:
    """Finest partition, allotment, and every block with a legal cutvertex."""
    p = finest_partition(basis.rank, (x_support(r) for r in relators))
    a = allot(relators, p)
    fib = fibers(a)
    candidates: List[Candidate] = []
    for b in p.blocks:
        ids = fib.get(min(b))
        if not ids:
            continue
        g = build_graph(relators[i] for i in ids)
        legal = [v for v in cutvertex_scan(g) if v != BASEPOINT]
        if legal:
            candidates.append((min(b), g, legal))
    return p, a, candidates


def cutvertex_algorithm(
    basis: BasisState,
    relators: Sequence[Relator],
    strategy: Strategy | str = "lex",
    max_iters: int | None = None,
    check: bool = True,
) -> Tuple[FactorizationReport, RunTrace]:
    """Run descents until every block's Whitehead graph is cutvertex-free.

    Each step strictly shortens the relators, so the loop stops within
    ``total_length(relators)`` steps; ``max_iters`` caps it lower if given.
    With ``check`` on, every plan and every per-relator length bound is
    re-verified and a failure raises :class:`InvariantError`.
    """
    if isinstance(strategy, str):
        strategy = make_strategy(strategy)
    relators = list(relators)
    _check_over(basis, relators)
    bound = total_length(relators)
    if max_iters is not None:
        bound = min(bound, max_iters)
    current = relators
    trace: List[TraceStep] = []

    while True:
        p, a, candidates = block_candidates(basis, current)
        if not candidates:
            break
        if len(trace) >= bound:
            raise InvariantError(f"no convergence within {bound} descent steps")
        block, z = strategy.choose(candidates)
        g = next(c[1] for c in candidates if c[0] == block)
        gens = p.block(block)
        plan = find_descent(g, z, gens)
        split = validate_plan(plan, g) if check else plan.split_turns(g.edges)
        t = plan_to_transform(plan)

        ids = [i for i, b in enumerate(a) if b == block]
        new_basis, rewritten = apply_transform(basis, t, [current[i] for i in ids])
        before = total_length(current)
        nxt = list(current)
        for i, r in zip(ids, rewritten):
            if check and len(r.letters) > len(current[i].letters) - count_split_turns(plan, current[i]):
                raise InvariantError(f"relator {i} did not shrink by its split-turn count")
            nxt[i] = r
        after = total_length(nxt)
        if after > before - len(split) or after >= before:
            raise InvariantError(f"length went {before} -> {after} with {len(split)} split turns")
        log.debug("block %d cut at %s: length %d -> %d", block, vertex_label(z), before, after)
        trace.append(TraceStep(block, z, plan, t, before, after, len(split)))
        basis, current = new_basis, nxt

    report = assemble_report(basis, p, a, current, tuple(trace), relators)
    return report, tuple(trace)


def factorize(
    relators: Sequence[Relator], rank: int | None = None, strategy: Strategy | str = "lex", **kw
) -> FactorizationReport:
    """Convenience wrapper starting from the standard basis."""
    if rank is None:
        rank = max((abs(x) for r in relators for x in r.letters), default=1)
    report, _ = cutvertex_algorithm(BasisState.identity(rank), relators, strategy, **kw)
    return report


def is_cutvertex_free(basis: BasisState, relators: Sequence[Relator], finder=None) -> bool:
    """No block graph has a legal cutvertex. ``finder`` maps a graph to its
    cutvertex set and defaults to the DFS scan."""
    p = finest_partition(basis.rank, (x_support(r) for r in relators))
    fib = fibers(allot(relators, p))
    for ids in fib.values():
        g = build_graph(relators[i] for i in ids)
        found = finder(g) if finder is not None else cutvertex_scan(g)
        if set(found) - {BASEPOINT}:
            return False
    return True


def change_basis(relators: Iterable[Relator], src: BasisState, dst: BasisState) -> List[Relator]:
    """Respell relators given over ``src`` in terms of ``dst``."""
    out = []
    for r in relators:
        r = substitute_relator(r, src.over_original)
        out.append(substitute_relator(r, dst.original_over_current))
    return out


def minimizing_algorithm(basis: BasisState, relators: Sequence[Relator]) -> BasisState:
    """Greedy descent over all Whitehead transforms.

    Takes the first transform in enumeration order that strictly shortens
    the relators and stops when none does.
    """
    current = list(relators)
    _check_over(basis, current)
    length = total_length(current)
    while True:
        for t in enumerate_transforms(basis.rank):
            if not t.changed(basis.rank):
                continue
            inverse = t.inverse_images(basis.rank)
            new_len = 0
            for r in current:
                new_len += len(substitute_relator(r, inverse).letters)
                if new_len >= length:
                    break
            if new_len < length:
                basis, current = apply_transform(basis, t, current)
                length = new_len
                break
        else:
            return basis


def rewrite_over_final(w: Sequence[int], trace: Iterable[TraceStep]) -> Word:
    """Spell a word over the starting basis in the basis a run ended with."""
    w = tuple(w)
    for step in trace:
        w = step.transform.rewrite(w)
    return w


def _distinct(relators: Sequence[Relator]) -> List[Relator]:
    seen, out = set(), []
    for r in relators:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


def subbasis_test(
    relators: Sequence[Relator], basis: BasisState | None = None, strategy: Strategy | str = "lex"
) -> Tuple[bool, FactorizationReport]:
    """Is this set of elements part of some basis?

    Over a cutvertex-free basis a sub-basis consists of basis letters, so it
    suffices to run the cutvertex algorithm and look at the result.
    """
    for i, r in enumerate(relators):
        if not isinstance(r, Element):
            raise PreconditionError(f"relator {i} is not an element; use class_subbasis_test")
    return _subbasis(relators, basis, strategy)


def class_subbasis_test(
    relators: Sequence[Relator], basis: BasisState | None = None, strategy: Strategy | str = "lex"
) -> Tuple[bool, FactorizationReport]:
    """Are these conjugacy classes the classes of part of some basis?"""
    for i, r in enumerate(relators):
        if not isinstance(r, ConjClass):
            raise PreconditionError(f"relator {i} is not a conjugacy class")
    return _subbasis(relators, basis, strategy)


def _subbasis(relators, basis, strategy) -> Tuple[bool, FactorizationReport]:
    relators = _distinct(relators)
    if basis is None:
        basis = BasisState.identity(max((abs(x) for r in relators for x in r.letters), default=1))
    report, _ = cutvertex_algorithm(basis, relators, strategy)
    gens = [abs(r.letters[0]) for r in report.rewritten if len(r.letters) == 1]
    ok = len(gens) == len(relators) and len(set(gens)) == len(gens)
    return ok, report


def apply_automorphism(relators: Iterable[Relator], images) -> List[Relator]:
    """Images of relators under the endomorphism ``gen -> images[gen]``."""
    return [substitute_relator(r, images) for r in relators]


def reads_back(report: FactorizationReport) -> bool:
    """Do the rewritten relators spell the inputs through the final basis?"""
    for r, rw in zip(report.relators, report.rewritten):
        back = substitute(rw.letters, report.basis.over_original)
        if isinstance(r, Element):
            if back != r.word:
                return False
        elif ConjClass.of(back) != r:
            return False
    return True


__all__ = [
    "FirstFoundStrategy",
    "LexStrategy",
    "RandomStrategy",
    "RunTrace",
    "TraceStep",
    "apply_automorphism",
    "change_basis",
    "class_subbasis_test",
    "cutvertex_algorithm",
    "factorize",
    "is_cutvertex_free",
    "make_strategy",
    "minimizing_algorithm",
    "reads_back",
    "rewrite_over_final",
    "subbasis_test",
]
