"""One length-reducing Whitehead transform from a legal cutvertex.

Given a legal cutvertex of the Whitehead graph of an atom, pick a letter
``y`` and a two-valued colouring ``chi`` of the vertices such that every
edge with differently coloured ends touches ``y``. The transform
``x -> y^-chi(x) . x . y^chi(x^-1)`` then shortens every relator by at least
its number of such split turns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional

from .errors import InvariantError, PreconditionError
from .graph import BASEPOINT, Turn, WhiteheadGraph, turns_of, vertex_key, vertex_label
from .transforms import WhiteheadTransform
from .words import ConjClass, Element, Relator, Word, cyclically_reduce, reduce


@dataclass(frozen=True)
class DescentPlan:
    """Letter ``y``, vertex split ``v_iota | v_tau`` and colouring ``chi``.

    ``chi`` covers the basepoint and every vertex of the graph it was built
    from; missing letters count as colour 0. ``shifted`` records whether
    ``y`` had to be moved away from the chosen cutvertex.
    """

    y: int
    v_iota: FrozenSet[int]
    v_tau: FrozenSet[int]
    m: int
    chi: Dict[int, int]
    shifted: bool = False

    def __post_init__(self) -> None:
        if self.m not in (0, -1):
            raise PreconditionError("m must be 0 or -1")
        if not self.v_iota or not self.v_tau or self.v_iota & self.v_tau:
            raise PreconditionError("v_iota and v_tau must be disjoint and nonempty")
        if self.y in self.v_iota or self.y in self.v_tau:
            raise PreconditionError("y must lie outside v_iota and v_tau")
        if self.colour(BASEPOINT) != 0:
            raise PreconditionError("chi must send the basepoint to 0")
        if self.colour(self.y) != self.m or self.colour(-self.y) != self.m:
            raise PreconditionError("chi must send y and y^-1 to m")
        if not set(self.chi.values()) <= {self.m, self.m + 1}:
            raise PreconditionError("chi takes values outside {m, m+1}")
        if len(set(self.chi.values())) < 2:
            raise PreconditionError("a constant chi splits no turn")

    def colour(self, v: int) -> int:
        return self.chi.get(v, 0)

    def is_split(self, turn: Turn) -> bool:
        return self.colour(turn[0]) != self.colour(turn[1])

    def split_turns(self, turns: Iterable[Turn]) -> List[Turn]:
        return [t for t in turns if self.is_split(t)]

    def to_dict(self) -> dict:
        order = lambda vs: [vertex_label(v) for v in sorted(vs, key=vertex_key)]
        return {
            "y": vertex_label(self.y),
            "v_iota": order(self.v_iota),
            "v_tau": order(self.v_tau),
            "m": self.m,
            "shifted": self.shifted,
            "raised": order(v for v, c in self.chi.items() if c != self.m),
        }


def find_descent(
    g: WhiteheadGraph, z: int, generators: Optional[Iterable[int]] = None
) -> DescentPlan:
    """Build a descent plan from the legal cutvertex ``z`` of ``g``.

    ``g`` must be the graph of an atom: every letter of the block (given by
    ``generators`` when known) is a vertex.
    """
    if z == BASEPOINT:
        raise PreconditionError("the basepoint is never a legal cutvertex")
    if z not in g.vertices:
        raise PreconditionError(f"vertex {z} is not in the graph")
    letters = sorted((v for v in g.vertices if v != BASEPOINT), key=vertex_key)
    if generators is not None:
        expected = {s * (x + 1) for x in generators for s in (1, -1)}
        if set(letters) != expected:
            raise PreconditionError("graph vertices do not cover the block's letters")
    if -z not in g.vertices:
        raise PreconditionError("graph is not the graph of an atom")

    comps = g.components(removed=[z])
    if len(comps) < 2:
        raise PreconditionError(f"vertex {z} is not a cutvertex")
    v2 = next(c for c in comps if -z in c)
    v1 = frozenset().union(*(c for c in comps if c is not v2))
    adj = g.adjacency()

    if adj[z] & v1:
        y, v_iota, v_tau, shifted = z, v1, v2, False
    else:
        # z only touches v2, so v1 | (v2 + z) separates the whole graph;
        # some letter must straddle it or the block would split further
        v1p, v2p = v1, v2 | {z}
        y = next((x for x in letters if x in v1p and -x in v2p), None)
        if y is None:
            raise InvariantError(
                "no letter straddles the separation; the block is not an atom"
            )
        v_iota, v_tau, shifted = v1p - {y}, frozenset(v2p), True

    if BASEPOINT in v_iota:
        m = -1
        chi = {v: 0 for v in v_iota}
        chi.update({v: -1 for v in v_tau | {y}})
    else:
        m = 0
        chi = {v: 0 for v in v_tau | {y, BASEPOINT}}
        chi.update({v: 1 for v in v_iota})
    return DescentPlan(y, frozenset(v_iota), frozenset(v_tau), m, chi, shifted)


def validate_plan(plan: DescentPlan, g: WhiteheadGraph) -> List[Turn]:
    """Check every graph-dependent condition on a plan; return its split edges."""
    y, vi, vt = plan.y, plan.v_iota, plan.v_tau
    if vi | vt | {y} != g.vertices or len(vi) + len(vt) + 1 != len(g.vertices):
        raise InvariantError("v_iota, v_tau and y must partition the vertices")
    if -y not in vt:
        raise InvariantError("y^-1 must lie in v_tau")
    adj = g.adjacency()
    if not adj[y] & vi:
        raise InvariantError("no edge joins y to v_iota")
    for u, v in g.edges:
        if (u in vi and v in vt) or (u in vt and v in vi):
            raise InvariantError(f"edge {(u, v)} joins v_iota to v_tau")
    for v in g.vertices:
        if v not in plan.chi:
            raise InvariantError(f"chi misses vertex {v}")
    split = plan.split_turns(g.edges)
    if not split:
        raise InvariantError("no split turn")
    for t in split:
        if y not in t:
            raise InvariantError(f"split turn {t} does not touch y")
    return split


def plan_to_transform(plan: DescentPlan) -> WhiteheadTransform:
    """The transform ``x' = y^-chi(x) . x . y^chi(x^-1)``.

    With colours in ``{0, 1}`` this marks the colour-1 letters against ``y``;
    with colours in ``{-1, 0}`` it marks the colour -1 letters against
    ``y^-1``.
    """
    if plan.m == 0:
        marked = frozenset(v for v, c in plan.chi.items() if v != BASEPOINT and c == 1)
        return WhiteheadTransform(plan.y, marked)
    marked = frozenset(v for v, c in plan.chi.items() if v != BASEPOINT and c == -1)
    return WhiteheadTransform(-plan.y, marked)


def count_split_turns(plan: DescentPlan, r: Relator) -> int:
    return len(plan.split_turns(turns_of(r)))


def collapse_rewrite(plan: DescentPlan, r: Relator) -> Word:
    """Rewrite ``r`` letter by letter, deleting each letter that sits on a
    split turn at ``y``; the surviving letters are read in the new basis.

    Independent of the substitution path in :mod:`transforms`, used to
    cross-check it. The result may need free reduction.
    """
    x = list(r.letters)
    n = len(x)
    if isinstance(r, Element):
        before = [0] + x              # before[i] = x_i, x_0 = 1
        after = x + [0]               # after[i] = x_{i+1}, x_{n+1} = 1
    else:
        before = [x[-1]] + x
        after = x + [x[0]]
    y = plan.y

    def turn_colour(i: int) -> int:
        # colour of the turn (tau x_i, iota x_{i+1}) away from y
        ends = {-before[i], after[i]} - {y}
        colours = {plan.colour(v) for v in ends}
        if len(colours) != 1:
            raise InvariantError(f"split turn at position {i} misses y")
        return colours.pop()

    n_ = [turn_colour(i) for i in range(n + 1)]
    kept = []
    for i in range(1, n + 1):
        xi = x[i - 1]
        if n_[i - 1] != plan.colour(xi):
            continue
        if n_[i] != plan.colour(-xi):
            continue
        kept.append(xi)
    return tuple(kept)


def collapse_matches(plan: DescentPlan, r: Relator, rewritten: Relator) -> bool:
    """Does the letter-deletion rewrite agree with a substitution rewrite?"""
    kept = reduce(collapse_rewrite(plan, r))
    if isinstance(r, Element):
        return isinstance(rewritten, Element) and kept == rewritten.word
    core, _ = cyclically_reduce(kept)
    return isinstance(rewritten, ConjClass) and core == rewritten.cyclic
