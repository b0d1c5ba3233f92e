"""Independent exact ground truth at desk scale.

Chromatic number and k-colorings come from saturation-ordered backtracking
with clique and independence-based lower bounds; clique and independence
numbers from bitmask branch and bound; maximum matching from augmenting
paths with blossom contraction.  Everything is deterministic and counts
search nodes against an explicit budget.
"""

from __future__ import annotations

import os
from collections import deque

from .errors import DeskCapExceeded
from .graph import Coloring, Graph, complement

DEFAULT_ORACLE_BUDGET = 10**8


def oracle_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("BULLCHROME_BUDGET")
    return int(env) if env else DEFAULT_ORACLE_BUDGET


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int) -> None:
        self.nodes = 0
        self.limit = limit

    def tick(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.limit:
            raise DeskCapExceeded(
                f"solver exceeded node budget ({self.nodes} > {self.limit})")


def _greedy_clique_lb(masks: list[int], n: int) -> int:
    """Greedy clique from each start vertex; cheap but useful lower bound."""
    best = 1 if n else 0
    order = sorted(range(n), key=lambda v: -masks[v].bit_count())
    for s in order[: min(n, 8)]:
        clique = [s]
        cand = masks[s]
        while cand:
            v = max(range(n), key=lambda u: (bool(cand >> u & 1),
                                             (cand & masks[u]).bit_count(), -u))
            if not (cand >> v) & 1:
                break
            clique.append(v)
            cand &= masks[v]
        best = max(best, len(clique))
    return best


def _greedy_coloring_ub(G: Graph) -> tuple[int, list[int]]:
    """Saturation-greedy coloring; returns (colors used, assignment)."""
    n = G.n
    colors = [0] * n
    forb = [0] * n
    deg = [G.degree(v) for v in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] == 0),
                key=lambda u: (forb[u].bit_count(), deg[u], -u))
        c = 1
        while forb[v] >> (c - 1) & 1:
            c += 1
        colors[v] = c
        bit = 1 << (c - 1)
        for w in G.adj[v]:
            forb[w] |= bit
    return max(colors, default=0), colors


def exact_coloring(G: Graph, k: int, budget: int | None = None) -> Coloring | None:
    """A proper k-coloring, or None when G is not k-colorable.

    Saturation-degree vertex selection, color symmetry broken by allowing at
    most one fresh color per step.
    """
    n = G.n
    if n == 0:
        return Coloring((), k)
    if k <= 0:
        return None
    counter = _Counter(oracle_budget(budget))
    masks = G.adjacency_masks()
    nbrs = [G.neighbors(v) for v in range(n)]
    deg = [len(nbrs[v]) for v in range(n)]
    colors = [0] * n
    forb = [0] * n
    full = (1 << k) - 1

    def rec(done: int, max_used: int) -> bool:
        counter.tick()
        if done == n:
            return True
        best, best_key = -1, (-1, -1, 0)
        for v in range(n):
            if colors[v] == 0:
                key = (forb[v].bit_count(), deg[v], -v)
                if key > best_key:
                    best, best_key = v, key
        v = best
        avail = ~forb[v] & ((1 << min(k, max_used + 1)) - 1) & full
        while avail:
            bit = avail & (-avail)
            avail ^= bit
            c = bit.bit_length()
            colors[v] = c
            touched = []
            for w in nbrs[v]:
                if colors[w] == 0 and not forb[w] & bit:
                    forb[w] |= bit
                    touched.append(w)
            if rec(done + 1, max(max_used, c)):
                return True
            colors[v] = 0
            for w in touched:
                forb[w] ^= bit
        return False

    if rec(0, 0):
        return Coloring(tuple(colors), k)
    return None


def _max_clique_size(masks: list[int], n: int, counter: _Counter,
                     stop_at: int | None = None) -> int:
    """Exact maximum clique via candidate-set branch and bound."""
    best = 0

    def rec(size: int, cand: int) -> None:
        nonlocal best
        counter.tick()
        if size + cand.bit_count() <= best:
            return
        if stop_at is not None and best >= stop_at:
            return
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            bit = cand & (-cand)
            cand ^= bit
            v = bit.bit_length() - 1
            rec(size + 1, cand & masks[v])

    rec(0, (1 << n) - 1)
    return best


def clique_number(G: Graph, budget: int | None = None) -> int:
    counter = _Counter(oracle_budget(budget))
    return _max_clique_size(G.adjacency_masks(), G.n, counter)


def independence_number(G: Graph, budget: int | None = None) -> int:
    return clique_number(complement(G), budget)


def chromatic_number(G: Graph, ub: int | None = None,
                     budget: int | None = None) -> int:
    """Exact chromatic number.

    Lower bound: max of the exact clique number and ceil(n / alpha); upper
    bound from saturation-greedy.  The optional ub caps the greedy bound.
    """
    n = G.n
    if n == 0:
        return 0
    if G.m == 0:
        return 1
    counter = _Counter(oracle_budget(budget))
    masks = G.adjacency_masks()
    omega = _max_clique_size(masks, n, counter)
    alpha = _max_clique_size(complement(G).adjacency_masks(), n, counter)
    lb = max(omega, -(-n // alpha))
    greedy_ub, _ = _greedy_coloring_ub(G)
    hi = min(greedy_ub, ub) if ub is not None else greedy_ub
    if hi < lb:
        hi = lb  # caller's ub was optimistic; search anyway
    for k in range(lb, hi):
        if exact_coloring(G, k, budget) is not None:
            return k
    return hi


def max_matching(G: Graph) -> int:
    """Size of a maximum matching (general graphs)."""
    return len(max_matching_edges(G))


def max_matching_edges(G: Graph) -> list[tuple[int, int]]:
    """Maximum matching via augmenting BFS with blossom contraction.

    Classic O(V^3) scheme: grow alternating trees from free vertices; odd
    cycles met along the way are contracted by redirecting their vertices to
    a common base.
    """
    n = G.n
    adj = [G.neighbors(v) for v in range(n)]
    match = [-1] * n

    def find_augmenting(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            x = a
            while True:
                x = base[x]
                seen[x] = True
                if match[x] == -1:
                    break
                x = parent[match[x]]
            y = b
            while True:
                y = base[y]
                if seen[y]:
                    return y
                y = parent[match[y]]

        def mark_path(v: int, b: int, child: int,
                      in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = True
                in_blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting(v)
    return sorted((v, match[v]) for v in range(n) if match[v] > v)
