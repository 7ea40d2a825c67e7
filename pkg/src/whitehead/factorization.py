"""Finest partitions of a basis, allotment of relators, and reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .grammar import format_relator, format_word
from .words import BasisState, Relator, substitute_relator, total_length, x_support


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


@dataclass(frozen=True)
class Partition:
    """Blocks of generator ids, ordered by their least element.

    A block's id is its least generator id.
    """

    blocks: Tuple[frozenset, ...]

    def __post_init__(self) -> None:
        seen: set = set()
        for b in self.blocks:
            if not b:
                raise PreconditionError("partition blocks must be nonempty")
            if seen & b:
                raise PreconditionError("partition blocks must be disjoint")
            seen |= b
        if seen != set(range(len(seen))):
            raise PreconditionError("partition must cover 0..rank-1")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=min)))

    @property
    def rank(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_ids(self) -> List[int]:
        return [min(b) for b in self.blocks]

    def block(self, block_id: int) -> frozenset:
        for b in self.blocks:
            if min(b) == block_id:
                return b
        raise KeyError(block_id)

    def block_of(self, gen: int) -> int:
        for b in self.blocks:
            if gen in b:
                return min(b)
        raise KeyError(gen)

    def refines(self, other: "Partition") -> bool:
        return all(any(b <= c for c in other.blocks) for b in self.blocks)


def finest_partition(rank: int, supports: Iterable[Iterable[int]]) -> Partition:
    """Finest partition of ``0..rank-1`` keeping every support inside a block."""
    uf = UnionFind(rank)
    for s in supports:
        s = list(s)
        for g in s:
            if not 0 <= g < rank:
                raise PreconditionError(f"support mentions generator {g} outside rank {rank}")
        for g in s[1:]:
            uf.union(s[0], g)
    groups: Dict[int, set] = {}
    for g in range(rank):
        groups.setdefault(uf.find(g), set()).add(g)
    return Partition(tuple(frozenset(b) for b in groups.values()))


Allotment = Tuple[int, ...]


def allot(relators: Sequence[Relator], p: Partition) -> Allotment:
    """Block id for each relator, by index."""
    owner = {g: min(b) for b in p.blocks for g in b}
    out = []
    for i, r in enumerate(relators):
        ids = {owner[g] for g in x_support(r)}
        if len(ids) != 1:
            raise PreconditionError(
                f"relator {i} has support straddling blocks {sorted(ids)}"
            )
        out.append(ids.pop())
    return tuple(out)


def fibers(a: Allotment) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for i, b in enumerate(a):
        out.setdefault(b, []).append(i)
    return out


def index_partition(a: Allotment) -> frozenset:
    """The partition of relator indices induced by an allotment."""
    return frozenset(frozenset(v) for v in fibers(a).values())


def is_atom(rank: int, relators: Sequence[Relator]) -> bool:
    if rank < 1:
        raise PreconditionError("rank must be at least 1")
    return len(finest_partition(rank, (x_support(r) for r in relators)).blocks) == 1


@dataclass(frozen=True)
class Factor:
    block: int
    generators: Tuple[int, ...]
    relators: Tuple[int, ...]


@dataclass(frozen=True)
class FactorizationReport:
    """The free factors found, what each relator was allotted to, and how."""

    basis: BasisState
    partition: Partition
    allotment: Allotment
    relators: Tuple[Relator, ...]
    rewritten: Tuple[Relator, ...]
    trace: Tuple[Any, ...] = field(default=())

    @property
    def factors(self) -> List[Factor]:
        fib = fibers(self.allotment)
        return [
            Factor(min(b), tuple(sorted(b)), tuple(fib.get(min(b), ())))
            for b in self.partition.blocks
        ]

    @property
    def rank_one_leftovers(self) -> List[int]:
        return [f.block for f in self.factors if not f.relators]

    @property
    def factor_count(self) -> int:
        return len(self.partition.blocks)

    def index_partition(self) -> frozenset:
        return index_partition(self.allotment)

    def factor_words(self, block: int) -> List[Tuple[int, ...]]:
        """Generators of a factor spelled over the original basis."""
        return [self.basis.over_original[g] for g in sorted(self.partition.block(block))]

    def to_dict(self, include_trace: bool = False) -> Dict[str, Any]:
        names = self.basis.names
        out: Dict[str, Any] = {
            "rank": self.basis.rank,
            "factors": [
                {
                    "block": f.block,
                    "generators": [
                        {"name": names[g], "over_original": format_word(self.basis.over_original[g])}
                        for g in f.generators
                    ],
                    "relators": list(f.relators),
                    "rank_one_leftover": not f.relators,
                }
                for f in self.factors
            ],
            "allotment": [
                {
                    "relator": i,
                    "input": format_relator(r),
                    "block": b,
                    "rewritten": format_relator(self.rewritten[i], names),
                }
                for i, (r, b) in enumerate(zip(self.relators, self.allotment))
            ],
            "rank_one_leftovers": self.rank_one_leftovers,
            "total_length": {
                "initial": total_length(self.relators),
                "final": total_length(self.rewritten),
            },
            "iterations": len(self.trace),
        }
        if include_trace:
            out["trace"] = [step.to_dict(names) for step in self.trace]
        return out

    def to_text(self) -> str:
        factors = []
        for f in self.factors:
            gens = ", ".join(format_word(self.basis.over_original[g]) for g in f.generators)
            factors.append(f"⟨{gens}⟩")
        lines = ["F = " + " * ".join(factors)]
        for i, (r, b) in enumerate(zip(self.relators, self.allotment)):
            lines.append(
                f"  {format_relator(r)} -> factor {b} as "
                f"{format_relator(self.rewritten[i], self.basis.names)}"
            )
        for b in self.rank_one_leftovers:
            lines.append(f"  factor {b} carries no relator (rank one)")
        lines.append(
            f"  length {total_length(self.relators)} -> {total_length(self.rewritten)}"
            f" in {len(self.trace)} step(s)"
        )
        return "\n".join(lines)


def assemble_report(
    basis: BasisState,
    p: Partition,
    a: Allotment,
    rewritten: Sequence[Relator],
    trace: Sequence[Any] = (),
    relators: Optional[Sequence[Relator]] = None,
) -> FactorizationReport:
    """Bundle a finished run. ``relators`` are the inputs over the original
    basis; when omitted they are recovered from ``rewritten`` via the basis."""
    if len(a) != len(rewritten):
        raise PreconditionError("allotment and relator list differ in length")
    if p.rank != basis.rank:
        raise PreconditionError("partition and basis differ in rank")
    if relators is None:
        relators = [substitute_relator(r, basis.over_original) for r in rewritten]
    return FactorizationReport(basis, p, tuple(a), tuple(relators), tuple(rewritten), tuple(trace))
