"""Turns, Whitehead graphs and their cutvertices.

Vertices are ints: ``0`` is the basepoint vertex for the identity and a
nonzero letter ``x`` is the vertex entered by ``x``. The vertex a letter
``x`` leaves from is ``-x``, so the turn between consecutive letters
``x_i, x_{i+1}`` is the pair ``{-x_i, x_{i+1}}``; the identity padding of an
element gives ``-0 == 0`` for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .errors import PreconditionError
from .grammar import format_letter
from .words import CyclicWord, Element, Relator, Word

BASEPOINT = 0

Vertex = int
Turn = Tuple[int, int]


def vertex_key(v: Vertex) -> int:
    """Deterministic order: basepoint, then by generator, positive first."""
    if v == BASEPOINT:
        return -1
    return 2 * (abs(v) - 1) + (v < 0)


def make_turn(u: Vertex, v: Vertex) -> Turn:
    return (u, v) if vertex_key(u) <= vertex_key(v) else (v, u)


def vertex_label(v: Vertex, names: Sequence[str] | None = None) -> str:
    return "1" if v == BASEPOINT else format_letter(v, names)


def turns_of_element(w: Word) -> FrozenSet[Turn]:
    if not w:
        raise PreconditionError("the trivial element has no turns in a relator set")
    turns = {make_turn(BASEPOINT, w[0]), make_turn(-w[-1], BASEPOINT)}
    for i in range(len(w) - 1):
        turns.add(make_turn(-w[i], w[i + 1]))
    return frozenset(turns)


def turns_of_class(c: CyclicWord) -> FrozenSet[Turn]:
    w = c.letters
    return frozenset(make_turn(-w[i - 1], w[i]) for i in range(len(w)))


def turns_of(r: Relator) -> FrozenSet[Turn]:
    if isinstance(r, Element):
        return turns_of_element(r.word)
    return turns_of_class(r.cyclic)


@dataclass(frozen=True)
class WhiteheadGraph:
    vertices: FrozenSet[Vertex]
    edges: FrozenSet[Turn]

    def __post_init__(self) -> None:
        touched = set()
        for u, v in self.edges:
            touched.add(u)
            touched.add(v)
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if u not in self.vertices or v not in self.vertices:
                raise PreconditionError(f"edge {(u, v)} leaves the vertex set")
        if touched != self.vertices:
            raise PreconditionError("every vertex must be touched by some edge")

    @classmethod
    def from_turns(cls, turns: Iterable[Turn]) -> "WhiteheadGraph":
        edges = frozenset(make_turn(u, v) for u, v in turns)
        verts = frozenset(v for e in edges for v in e)
        return cls(verts, edges)

    def ordered_vertices(self) -> List[Vertex]:
        return sorted(self.vertices, key=vertex_key)

    def adjacency(self) -> Dict[Vertex, Set[Vertex]]:
        adj: Dict[Vertex, Set[Vertex]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def components(self, removed: Iterable[Vertex] = ()) -> List[FrozenSet[Vertex]]:
        """Connected components after deleting ``removed``, in vertex order."""
        gone = set(removed)
        adj = self.adjacency()
        seen: Set[Vertex] = set()
        comps = []
        for s in self.ordered_vertices():
            if s in gone or s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for v in adj[u]:
                    if v not in gone and v not in comp:
                        comp.add(v)
                        stack.append(v)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def to_dot(self, name: str = "White", names: Sequence[str] | None = None) -> str:
        return "\n".join(dot_lines(self, name, names, indent="")) + "\n"


def build_graph(relators: Iterable[Relator]) -> WhiteheadGraph:
    """Whitehead graph of a relator set: the union of its turns.

    Only vertices touched by a turn are present, so an empty relator set
    gives the empty graph.
    """
    turns: Set[Turn] = set()
    for r in relators:
        turns |= turns_of(r)
    return WhiteheadGraph.from_turns(turns)


def cutvertex_scan(g: WhiteheadGraph) -> List[Vertex]:
    """Cutvertices in the order an iterative DFS first certifies them.

    A disconnected graph without isolated vertices has every vertex as a
    cutvertex; otherwise these are the articulation points.
    """
    order = g.ordered_vertices()
    if len(order) < 3:
        return []
    adj = {v: sorted(ns, key=vertex_key) for v, ns in g.adjacency().items()}
    disc: Dict[Vertex, int] = {}
    low: Dict[Vertex, int] = {}
    found: List[Vertex] = []
    marked: Set[Vertex] = set()
    n_components = 0

    for root in order:
        if root in disc:
            continue
        n_components += 1
        disc[root] = low[root] = len(disc)
        root_children = 0
        stack = [(root, None, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if v in disc:
                    low[u] = min(low[u], disc[v])
                else:
                    disc[v] = low[v] = len(disc)
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(adj[v])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent] and parent not in marked:
                    marked.add(parent)
                    found.append(parent)
        if root_children >= 2 and root not in marked:
            marked.add(root)
            found.append(root)

    if n_components >= 2:
        return found + [v for v in order if v not in marked]
    return found


def cutvertices(g: WhiteheadGraph) -> FrozenSet[Vertex]:
    return frozenset(cutvertex_scan(g))


def legal_cutvertices(g: WhiteheadGraph) -> FrozenSet[Vertex]:
    return cutvertices(g) - {BASEPOINT}


def dot_lines(g: WhiteheadGraph, name: str, names=None, indent: str = "") -> List[str]:
    quoted = name.replace("\\", "\\\\").replace('"', '\\"')
    lines = [f'{indent}graph "{quoted}" {{']
    for v in g.ordered_vertices():
        lines.append(f'{indent}  "{vertex_label(v, names)}";')
    for u, v in sorted(g.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))):
        lines.append(f'{indent}  "{vertex_label(u, names)}" -- "{vertex_label(v, names)}";')
    lines.append(f"{indent}}}")
    return lines

