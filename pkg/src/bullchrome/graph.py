"""Immutable simple-graph core.

Graphs live on dense vertex ids 0..n-1 with set adjacency.  Everything here
is a pure function; values can be shared freely across threads.  Subgraph
operations return explicit old->new relabel maps so witnesses found in a
subgraph can be lifted back to the original vertex names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import InvalidColoring, InvalidEdge, InvalidVertex

if TYPE_CHECKING:  # pragma: no cover
    from .patterns import PatternWitness


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with per-vertex neighbor sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in increasing order (deterministic iteration)."""
        return tuple(sorted(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree_sequence(self) -> list[int]:
        return sorted(len(a) for a in self.adj)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def adjacency_masks(self) -> list[int]:
        """Adjacency as one bitmask per vertex (bit v of masks[u] = edge uv)."""
        masks = [0] * self.n
        for u in range(self.n):
            acc = 0
            for v in self.adj[u]:
                acc |= 1 << v
            masks[u] = acc
        return masks


@dataclass(frozen=True)
class Coloring:
    """Total color assignment; colors[v] is in 1..k."""

    colors: tuple[int, ...]
    k: int

    def color_of(self, v: int) -> int:
        return self.colors[v]

    def used(self) -> int:
        return len(set(self.colors))

    def to_json_dict(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decider: a proper coloring or a named obstruction."""

    colorable: bool
    k: int
    coloring: Coloring | None
    obstruction: "PatternWitness | None"
    trace: tuple[str, ...] = ()

    @classmethod
    def yes(cls, k: int, coloring: Coloring, trace: Iterable[str] = ()) -> "Verdict":
        return cls(True, k, coloring, None, tuple(trace))

    @classmethod
    def no(cls, k: int, witness: "PatternWitness", trace: Iterable[str] = ()) -> "Verdict":
        return cls(False, k, None, witness, tuple(trace))

    def to_json_dict(self) -> dict:
        return {
            "colorable": self.colorable,
            "k": self.k,
            "coloring": list(self.coloring.colors) if self.coloring else None,
            "obstruction": self.obstruction.to_json_dict() if self.obstruction else None,
            "trace": list(self.trace),
        }


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates are deduplicated."""
    if n < 0:
        raise InvalidVertex(f"negative vertex count {n}")
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in sets))


def complement(G: Graph) -> Graph:
    """Edge present iff absent in G; an involution."""
    full = frozenset(range(G.n))
    return Graph(G.n, tuple(full - G.adj[v] - {v} for v in range(G.n)))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets.

    H's vertices are shifted up by G.n.
    """
    off = G.n
    n = G.n + H.n
    g_side = frozenset(range(off, n))
    h_side = frozenset(range(off))
    adj = [G.adj[v] | g_side for v in range(G.n)]
    adj += [frozenset(w + off for w in H.adj[v]) | h_side for v in range(H.n)]
    return Graph(n, tuple(adj))


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by S, plus the old->new relabel map.

    Vertices keep their relative order: sorted(S)[i] becomes i.
    """
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < G.n:
            raise InvalidVertex(f"vertex {v} outside 0..{G.n - 1}")
    relabel = {v: i for i, v in enumerate(verts)}
    keep = set(verts)
    adj = tuple(
        frozenset(relabel[w] for w in G.adj[v] if w in keep) for v in verts
    )
    return Graph(len(verts), adj), relabel


def reduce_min_degree(G: Graph, d: int) -> tuple[Graph, list[int], dict[int, int]]:
    """Repeatedly delete any vertex of current degree < d.

    Returns (reduced graph, deletion order in original labels, old->new map
    for the surviving vertices).  Any proper d-coloring of the reduced graph
    extends greedily along the reversed order to a proper d-coloring of G.
    """
    if d < 1:
        raise ValueError("threshold must be >= 1")
    alive = set(range(G.n))
    deg = {v: G.degree(v) for v in alive}
    order: list[int] = []
    while True:
        victim = min((v for v in alive if deg[v] < d), default=None)
        if victim is None:
            break
        order.append(victim)
        alive.discard(victim)
        del deg[victim]
        for w in G.adj[victim]:
            if w in alive:
                deg[w] -= 1
    reduced, relabel = induced_subgraph(G, alive)
    return reduced, order, relabel


def extend_reduced_coloring(
    G: Graph,
    reduced_coloring: Coloring,
    order: Sequence[int],
    relabel: dict[int, int],
) -> Coloring:
    """Lift a coloring of the reduced graph back to G, coloring the deleted
    vertices greedily in reverse deletion order."""
    k = reduced_coloring.k
    colors = [0] * G.n
    for old, new in relabel.items():
        colors[old] = reduced_coloring.colors[new]
    for v in reversed(order):
        taken = {colors[w] for w in G.adj[v] if colors[w]}
        c = next(c for c in range(1, k + 1) if c not in taken)
        colors[v] = c
    return Coloring(tuple(colors), k)


def is_proper_coloring(G: Graph, c: Coloring) -> bool:
    """True iff every vertex is colored in 1..k and no edge is monochromatic."""
    if len(c.colors) != G.n:
        raise InvalidColoring(f"{len(c.colors)} colors for {G.n} vertices")
    if any(not 1 <= col <= c.k for col in c.colors):
        return False
    return all(c.colors[u] != c.colors[v] for u, v in G.edges())


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = [False] * G.n
    out: list[list[int]] = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1
