"""Detection of named induced structures, each returning an explicit witness.

Fixed small patterns (bull, claw, chair, C5, cliques) are found by scanning
vertex subsets in lexicographic order with a role-directed predicate, so the
returned witness is always the lexicographically smallest occurrence.  Hole,
antihole, wheel and spindle searches are exact exponential searches with an
explicit node budget; they are meant for desk-scale graphs.

Witness vertex order is structural where it matters: holes and wheels store
the rim in cycle order, antiholes store the complement-cycle order, spindles
and expansions store vertices block by block.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DeskCapExceeded, TimeBudgetExceeded
from .graph import Graph, complement, induced_subgraph, make_graph

DEFAULT_PATTERN_BUDGET = 10**7
DESK_CAP = 25

# Pattern kind tags.
BULL = "bull"
CLAW = "claw"
CHAIR = "chair"
C5 = "c5"
CLIQUE = "clique"
ODD_HOLE = "odd_hole"
ODD_ANTIHOLE = "odd_antihole"
SPINDLE = "spindle"
ODD_WHEEL = "odd_wheel"

FIXED_KINDS = (BULL, CLAW, CHAIR, C5)

_SPINDLE_JOIN = re.compile(r"^m(\d+)\+k1$")


def pattern_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("BULLCHROME_BUDGET")
    return int(env) if env else DEFAULT_PATTERN_BUDGET


@dataclass(frozen=True)
class PatternWitness:
    """A named structure plus the vertex set inducing it.

    `roles` maps structural role names (e.g. "hub", "center") to vertices;
    `param` carries the pattern's numeric parameter (clique size, cycle
    length, spindle index); `sizes` is set for expansion-shaped witnesses.
    """

    kind: str
    vertices: tuple[int, ...]
    roles: dict[str, int] = field(default_factory=dict)
    param: int | None = None
    sizes: tuple[int, ...] | None = None

    def label(self) -> str:
        if self.kind in (CLIQUE, ODD_HOLE, ODD_ANTIHOLE, SPINDLE, ODD_WHEEL,
                         "odd_cycle+k2") and self.param is not None:
            return f"{self.kind}({self.param})"
        return self.kind

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def to_json_dict(self) -> dict:
        d = {
            "kind": self.label(),
            "vertices": list(self.vertices),
            "roles": dict(sorted(self.roles.items())),
        }
        if self.sizes is not None:
            d["sizes"] = list(self.sizes)
        return d


def fixed_pattern_graph(kind: str) -> Graph:
    """Reference copy of a fixed pattern (vertex 0.. in role order)."""
    if kind == BULL:
        # triangle 1-2-3 with horns 0 on 1 and 4 on 3
        return make_graph(5, [(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)])
    if kind == CLAW:
        return make_graph(4, [(0, 1), (0, 2), (0, 3)])
    if kind == CHAIR:
        # claw center 0 with leaves 1, 2 and a two-edge arm 0-3-4
        return make_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    if kind == C5:
        return make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    raise ValueError(f"not a fixed pattern: {kind!r}")


def parse_pattern_token(token: str) -> tuple[str, int | None]:
    """Parse a CLI-style pattern token: bull, claw, chair, c5, or kN."""
    t = token.strip().lower().replace("-", "_")
    if t in FIXED_KINDS:
        return t, None
    m = re.fullmatch(r"k(\d+)", t)
    if m:
        return CLIQUE, int(m.group(1))
    raise ValueError(f"unknown pattern token {token!r}")


# ---------------------------------------------------------------------------
# Fixed-pattern search


def _canonical_cycle(order: list[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic vertex order: smallest vertex first, then the
    direction whose second vertex is smaller."""
    i = order.index(min(order))
    fwd = order[i:] + order[:i]
    rev = [fwd[0]] + fwd[1:][::-1]
    return tuple(fwd if fwd[1] <= rev[1] else rev)


def _subset_cycle_order(G: Graph, sub: tuple[int, ...]) -> list[int] | None:
    """If `sub` induces a single cycle, return it in cycle order."""
    inside = set(sub)
    start = min(sub)
    order = [start]
    nbrs = sorted(w for w in G.adj[start] if w in inside)
    if len(nbrs) != 2:
        return None
    prev, cur = start, nbrs[0]
    while cur != start:
        order.append(cur)
        step = [w for w in G.adj[cur] if w in inside and w != prev]
        if len(step) != 1:
            return None
        prev, cur = cur, step[0]
    return order if len(order) == len(sub) else None


def _match_bull(G: Graph, sub: tuple[int, ...],
                degs: tuple[int, ...]) -> PatternWitness | None:
    bases = sorted(v for v, d in zip(sub, degs) if d == 3)
    top = next(v for v, d in zip(sub, degs) if d == 2)
    horns = sorted(v for v, d in zip(sub, degs) if d == 1)
    b1, b2 = bases
    if not (G.has_edge(b1, b2) and G.has_edge(top, b1) and G.has_edge(top, b2)):
        return None
    h_of = {}
    for h in horns:
        att = [b for b in bases if G.has_edge(h, b)]
        if len(att) != 1 or G.has_edge(h, top):
            return None
        h_of[h] = att[0]
    if h_of[horns[0]] == h_of[horns[1]]:
        return None
    if G.has_edge(horns[0], horns[1]):
        return None
    base1 = h_of[horns[0]]
    base2 = h_of[horns[1]]
    roles = {"horn1": horns[0], "base1": base1, "top": top,
             "base2": base2, "horn2": horns[1]}
    return PatternWitness(BULL, tuple(sorted(sub)), roles)


def _match_claw(G: Graph, sub: tuple[int, ...],
                degs: tuple[int, ...]) -> PatternWitness | None:
    center = next(v for v, d in zip(sub, degs) if d == 3)
    leaves = sorted(v for v in sub if v != center)
    if not all(G.has_edge(center, u) for u in leaves):
        return None
    roles = {"center": center, "leaf1": leaves[0], "leaf2": leaves[1],
             "leaf3": leaves[2]}
    return PatternWitness(CLAW, tuple(sorted(sub)), roles)


def _match_chair(G: Graph, sub: tuple[int, ...],
                 degs: tuple[int, ...]) -> PatternWitness | None:
    center = next(v for v, d in zip(sub, degs) if d == 3)
    mid = next(v for v, d in zip(sub, degs) if d == 2)
    ones = sorted(v for v, d in zip(sub, degs) if d == 1)
    if not (G.has_edge(center, mid)):
        return None
    tails = [v for v in ones if G.has_edge(mid, v)]
    leaves = [v for v in ones if G.has_edge(center, v)]
    if len(tails) != 1 or len(leaves) != 2:
        return None
    roles = {"center": center, "leaf1": leaves[0], "leaf2": leaves[1],
             "mid": mid, "tail": tails[0]}
    return PatternWitness(CHAIR, tuple(sorted(sub)), roles)


def _match_c5(G: Graph, sub: tuple[int, ...],
              degs: tuple[int, ...]) -> PatternWitness | None:
    order = _subset_cycle_order(G, sub)
    if order is None:
        return None
    return PatternWitness(C5, _canonical_cycle(order), param=5)


_MATCHERS = {BULL: _match_bull, CLAW: _match_claw, CHAIR: _match_chair,
             C5: _match_c5}
_SIZES = {BULL: 5, CLAW: 4, CHAIR: 5, C5: 5}
_DEG_KEY = {BULL: (1, 1, 2, 3, 3), CLAW: (1, 1, 1, 3),
            CHAIR: (1, 1, 1, 2, 3), C5: (2, 2, 2, 2, 2)}


def _lex_min_clique(G: Graph, r: int) -> tuple[int, ...] | None:
    """Lexicographically smallest r-clique, by increasing-vertex backtracking."""
    if r == 0:
        return ()
    masks = G.adjacency_masks()

    def rec(chosen: list[int], cand: int) -> tuple[int, ...] | None:
        if len(chosen) == r:
            return tuple(chosen)
        if len(chosen) + cand.bit_count() < r:
            return None
        c = cand
        while c:
            bit = c & (-c)
            c ^= bit
            v = bit.bit_length() - 1
            got = rec(chosen + [v], c & masks[v])
            if got:
                return got
        return None

    return rec([], (1 << G.n) - 1)


def find_fixed_pattern(G: Graph, kind: str, r: int | None = None) -> PatternWitness | None:
    """First (lex-smallest vertex set) induced occurrence of a fixed pattern.

    `kind` is one of bull/claw/chair/c5/clique; cliques take the size `r`.
    """
    if kind == CLIQUE:
        if r is None or r < 1:
            raise ValueError("clique search needs a size r >= 1")
        if r > G.n:
            return None
        got = _lex_min_clique(G, r)
        if got is None:
            return None
        return PatternWitness(CLIQUE, got, param=r)
    matcher = _MATCHERS[kind]
    size = _SIZES[kind]
    key = _DEG_KEY[kind]
    if G.n < size:
        return None
    masks = G.adjacency_masks()
    bit = [1 << v for v in range(G.n)]
    for sub in combinations(range(G.n), size):
        smask = 0
        for v in sub:
            smask |= bit[v]
        degs = tuple((masks[v] & smask).bit_count() for v in sub)
        if tuple(sorted(degs)) != key:
            continue
        w = matcher(G, sub, degs)
        if w is not None:
            return w
    return None


# ---------------------------------------------------------------------------
# Holes, antiholes, wheels


def find_odd_hole(
    G: Graph,
    min_len: int = 5,
    budget: int | None = None,
    exact_len: int | None = None,
) -> PatternWitness | None:
    """Exact search for an induced odd cycle of length >= min_len.

    DFS over chordless paths: the path grows only through vertices larger
    than the base, not adjacent to any internal path vertex; vertices
    adjacent to the base may only close the cycle.  Exponential worst case,
    guarded by a node budget.
    """
    if min_len % 2 == 0 or min_len < 5:
        raise ValueError("min_len must be odd and >= 5")
    if exact_len is not None and (exact_len % 2 == 0 or exact_len < min_len):
        raise ValueError("exact_len must be odd and >= min_len")
    limit = pattern_budget(budget)
    masks = G.adjacency_masks()
    nbrs = [G.neighbors(v) for v in range(G.n)]
    max_extend = exact_len if exact_len is not None else G.n
    nodes = 0

    def rec(s: int, path: list[int], path_mask: int, banned: int) -> list[int] | None:
        nonlocal nodes
        last = path[-1]
        sbit = 1 << s
        for w in nbrs[last]:
            if w <= s:
                continue
            wbit = 1 << w
            if path_mask & wbit or banned & wbit:
                continue
            nodes += 1
            if nodes > limit:
                raise TimeBudgetExceeded(nodes, limit)
            length = len(path) + 1
            if masks[w] & sbit:
                if (length >= min_len and length % 2 == 1
                        and (exact_len is None or length == exact_len)):
                    return path + [w]
                continue  # adjacent to the base: may not be internal
            if length >= max_extend:
                continue
            got = rec(s, path + [w], path_mask | wbit, banned | masks[last])
            if got:
                return got
        return None

    for s in range(G.n):
        for p1 in nbrs[s]:
            if p1 <= s:
                continue
            got = rec(s, [s, p1], (1 << s) | (1 << p1), 0)
            if got:
                return PatternWitness(ODD_HOLE, _canonical_cycle(got),
                                      param=len(got))
    return None


def find_odd_antihole(
    G: Graph,
    min_len: int = 5,
    budget: int | None = None,
    exact_len: int | None = None,
) -> PatternWitness | None:
    """Vertex set whose complement-induced graph is an odd cycle >= min_len.

    Note the length-5 case coincides with an induced C5.
    """
    hole = find_odd_hole(complement(G), min_len, budget, exact_len)
    if hole is None:
        return None
    return PatternWitness(ODD_ANTIHOLE, hole.vertices, param=hole.param)


def find_odd_wheel(
    G: Graph,
    exact_len: int | None = None,
    budget: int | None = None,
) -> PatternWitness | None:
    """A hub vertex plus an induced odd cycle (length >= 5) of its neighbors.

    With exact_len=5 only length-5 rims are reported.
    """
    for hub in range(G.n):
        nb = G.neighbors(hub)
        if len(nb) < 5:
            continue
        sub, relabel = induced_subgraph(G, nb)
        inv = {i: v for v, i in relabel.items()}
        if exact_len == 5:
            hole = find_fixed_pattern(sub, C5)
        else:
            hole = find_odd_hole(sub, 5, budget, exact_len)
        if hole is None:
            continue
        rim = _canonical_cycle([inv[i] for i in hole.vertices])
        return PatternWitness(ODD_WHEEL, rim + (hub,), roles={"hub": hub},
                              param=len(rim))
    return None


# ---------------------------------------------------------------------------
# Expansion-shaped searches (spindles and friends)


def spindle_sizes(p: int) -> tuple[int, ...]:
    """Block-size template of the (3p+1)-vertex spindle for p >= 2."""
    return tuple([2, 1] * p + [1])


def find_induced_expansion(
    G: Graph,
    sizes: tuple[int, ...],
    budget: int | None = None,
) -> list[tuple[int, ...]] | None:
    """First induced cycle-of-cliques with the given block sizes.

    Blocks are chosen in template order; consecutive blocks must be fully
    joined, non-consecutive blocks fully non-adjacent, each block a clique.
    Rotations and reflections of the template are found automatically since
    the starting block is unconstrained.
    """
    q = len(sizes)
    if q < 3 or sum(sizes) > G.n:
        return None
    masks = G.adjacency_masks()
    limit = pattern_budget(budget)
    all_mask = (1 << G.n) - 1
    nodes = 0

    def cliques_in(pool: int, size: int):
        """Yield `size`-cliques inside the pool mask, lexicographically."""
        def pick(chosen: list[int], cand: int):
            if len(chosen) == size:
                yield tuple(chosen)
                return
            if len(chosen) + cand.bit_count() < size:
                return
            c = cand
            while c:
                bit = c & (-c)
                c ^= bit
                v = bit.bit_length() - 1
                yield from pick(chosen + [v], c & masks[v])
        yield from pick([], pool)

    def rec(blocks: list[tuple[int, ...]], used: int):
        nonlocal nodes
        j = len(blocks)
        if j == q:
            return list(blocks)
        adj_req = all_mask
        non_req = 0
        if j >= 1:
            for v in blocks[j - 1]:
                adj_req &= masks[v]
        if j == q - 1:
            for v in blocks[0]:
                adj_req &= masks[v]
            lo, hi = 1, q - 3
        else:
            lo, hi = 0, j - 2
        for i in range(lo, hi + 1):
            non_req |= sum(1 << v for v in blocks[i])
        pool = adj_req & ~used & all_mask
        # candidates must avoid every neighbor-of-forbidden-block vertex
        forb_neigh = 0
        for i in range(lo, hi + 1):
            for v in blocks[i]:
                forb_neigh |= masks[v]
        pool &= ~forb_neigh & ~non_req
        for blk in cliques_in(pool, sizes[j]):
            nodes += 1
            if nodes > limit:
                raise TimeBudgetExceeded(nodes, limit)
            got = rec(blocks + [blk], used | sum(1 << v for v in blk))
            if got:
                return got
        return None

    return rec([], 0)


def _spindle_roles(blocks: list[tuple[int, ...]], p: int) -> dict[str, int]:
    """Label spindle vertices u0..u_{3p} from the block decomposition."""
    roles = {"u0": blocks[2 * p][0]}
    for i in range(1, p + 1):
        pair = sorted(blocks[2 * i - 2])
        roles[f"u{3 * i - 2}"] = pair[0]
        roles[f"u{3 * i - 1}"] = pair[1]
        roles[f"u{3 * i}"] = blocks[2 * i - 1][0]
    return roles


def _spindle_witness(blocks: list[tuple[int, ...]], p: int) -> PatternWitness:
    verts = tuple(v for blk in blocks for v in sorted(blk))
    return PatternWitness(SPINDLE, verts, roles=_spindle_roles(blocks, p),
                          param=p, sizes=spindle_sizes(p))


def find_spindle(G: Graph, budget: int | None = None) -> PatternWitness | None:
    """Smallest-index induced spindle: K4 for p=1, else the expansion template.

    When the whole graph is itself a cycle-of-cliques the search reduces to a
    template fit over its block sizes; otherwise a direct template search runs
    for each feasible p in increasing order.
    """
    k4 = find_fixed_pattern(G, CLIQUE, 4)
    if k4 is not None:
        blocks = [(k4.vertices[0], k4.vertices[1]), (k4.vertices[2],),
                  (k4.vertices[3],)]
        # p=1 degenerates: present the K4 with u-labels in vertex order
        roles = {f"u{i}": v for i, v in enumerate(k4.vertices)}
        return PatternWitness(SPINDLE, k4.vertices, roles=roles, param=1)

    from .expansion import recognize_clique_expansion  # no import cycle
    from .graph import is_connected

    if is_connected(G) and G.n >= 7:
        exp = recognize_clique_expansion(G)
        if exp is not None:
            if exp.p % 2 == 1 and exp.p >= 5:
                p = (exp.p - 1) // 2
                fit = _fit_template_in_expansion(exp.sizes, exp.parts,
                                                 spindle_sizes(p))
                if fit is not None:
                    return _spindle_witness(fit, p)
            return None  # expansions contain no other induced spindles

    p = 2
    while 3 * p + 1 <= G.n:
        blocks = find_induced_expansion(G, spindle_sizes(p), budget)
        if blocks is not None:
            return _spindle_witness(blocks, p)
        p += 1
    return None


def _fit_template_in_expansion(
    sizes: tuple[int, ...],
    parts: tuple[tuple[int, ...], ...],
    template: tuple[int, ...],
) -> list[tuple[int, ...]] | None:
    """Fit a block-size template into an expansion over all rotations and
    reflections; pick the lex-first orientation and the smallest vertices."""
    q = len(sizes)
    if len(template) != q:
        return None
    orientations = []
    idx = list(range(q))
    for r in range(q):
        rot = idx[r:] + idx[:r]
        orientations.append(rot)
        orientations.append([rot[0]] + rot[1:][::-1])
    for orient in orientations:
        if all(template[j] <= sizes[orient[j]] for j in range(q)):
            return [tuple(sorted(parts[orient[j]])[: template[j]])
                    for j in range(q)]
    return None


def is_perfect_desk(G: Graph, cap: int = DESK_CAP, budget: int | None = None) -> bool:
    """Exact perfection test at desk scale: no odd hole, no odd antihole."""
    if G.n > cap:
        raise DeskCapExceeded(f"n={G.n} above desk cap {cap}")
    return (find_odd_hole(G, 5, budget) is None
            and find_odd_antihole(G, 5, budget) is None)


# ---------------------------------------------------------------------------
# Witness re-verification


def _is_induced_cycle_order(G: Graph, order: tuple[int, ...]) -> bool:
    p = len(order)
    if len(set(order)) != p:
        return False
    for i in range(p):
        for j in range(i + 1, p):
            consec = (j - i == 1) or (i == 0 and j == p - 1)
            if G.has_edge(order[i], order[j]) != consec:
                return False
    return True


def _is_antihole_order(G: Graph, order: tuple[int, ...]) -> bool:
    p = len(order)
    if len(set(order)) != p:
        return False
    for i in range(p):
        for j in range(i + 1, p):
            consec = (j - i == 1) or (i == 0 and j == p - 1)
            if G.has_edge(order[i], order[j]) == consec:
                return False
    return True


def _check_expansion_blocks(G: Graph, blocks: list[tuple[int, ...]]) -> bool:
    q = len(blocks)
    flat = [v for b in blocks for v in b]
    if len(set(flat)) != len(flat):
        return False
    for j, blk in enumerate(blocks):
        for a, b in combinations(blk, 2):
            if not G.has_edge(a, b):
                return False
        nxt = blocks[(j + 1) % q]
        for a in blk:
            for b in nxt:
                if not G.has_edge(a, b):
                    return False
        for i in range(q):
            if i in (j, (j + 1) % q, (j - 1) % q):
                continue
            for a in blk:
                for b in blocks[i]:
                    if G.has_edge(a, b):
                        return False
    return True


def _blocks_from_sizes(vertices: tuple[int, ...], sizes: tuple[int, ...]):
    blocks = []
    pos = 0
    for s in sizes:
        blocks.append(tuple(vertices[pos:pos + s]))
        pos += s
    return blocks if pos == len(vertices) else None


def _full_to(G: Graph, v: int, targets) -> bool:
    return all(G.has_edge(v, t) for t in targets)


def check_witness(G: Graph, w: PatternWitness, k: int | None = None) -> bool:
    """Re-verify that the witness set induces the named structure in G."""
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < G.n for v in vs):
        return False
    kind = w.kind

    if kind in FIXED_KINDS and kind != C5:
        ref = fixed_pattern_graph(kind)
        role_order = {
            BULL: ("horn1", "base1", "top", "base2", "horn2"),
            CLAW: ("center", "leaf1", "leaf2", "leaf3"),
            CHAIR: ("center", "leaf1", "leaf2", "mid", "tail"),
        }[kind]
        try:
            mapped = [w.roles[r] for r in role_order]
        except KeyError:
            return False
        if sorted(mapped) != sorted(vs):
            return False
        for i in range(ref.n):
            for j in range(i + 1, ref.n):
                if G.has_edge(mapped[i], mapped[j]) != ref.has_edge(i, j):
                    return False
        return True

    if kind == C5:
        return len(vs) == 5 and _is_induced_cycle_order(G, vs)
    if kind == CLIQUE:
        return (w.param == len(vs)
                and all(G.has_edge(a, b) for a, b in combinations(vs, 2)))
    if kind == ODD_HOLE:
        return (len(vs) == w.param and len(vs) >= 5 and len(vs) % 2 == 1
                and _is_induced_cycle_order(G, vs))
    if kind == ODD_ANTIHOLE:
        return (len(vs) == w.param and len(vs) >= 5 and len(vs) % 2 == 1
                and _is_antihole_order(G, vs))
    if kind == SPINDLE:
        p = w.param or 0
        if p == 1:
            return (len(vs) == 4
                    and all(G.has_edge(a, b) for a, b in combinations(vs, 2)))
        blocks = _blocks_from_sizes(vs, spindle_sizes(p))
        return blocks is not None and _check_expansion_blocks(G, blocks)
    if kind == ODD_WHEEL:
        rim, hub = vs[:-1], vs[-1]
        return (len(rim) == w.param and len(rim) >= 5 and len(rim) % 2 == 1
                and _is_induced_cycle_order(G, rim)
                and _full_to(G, hub, rim))
    if kind == "odd_cycle+k2":
        rim, a1, a2 = vs[:-2], vs[-2], vs[-1]
        return (len(rim) == w.param and len(rim) % 2 == 1 and len(rim) >= 5
                and _is_induced_cycle_order(G, rim)
                and G.has_edge(a1, a2)
                and _full_to(G, a1, rim) and _full_to(G, a2, rim))
    if kind in ("c7bar+k1", "c9bar+k1"):
        base, apex = vs[:-1], vs[-1]
        want = 7 if kind == "c7bar+k1" else 9
        return (len(base) == want and _is_antihole_order(G, base)
                and _full_to(G, apex, base))
    if kind == "c7bar+k2":
        base, a1, a2 = vs[:-2], vs[-2], vs[-1]
        return (len(base) == 7 and _is_antihole_order(G, base)
                and G.has_edge(a1, a2)
                and _full_to(G, a1, base) and _full_to(G, a2, base))
    if kind == "c5+k2":
        base, a1, a2 = vs[:-2], vs[-2], vs[-1]
        return (len(base) == 5 and _is_induced_cycle_order(G, base)
                and G.has_edge(a1, a2)
                and _full_to(G, a1, base) and _full_to(G, a2, base))
    m = _SPINDLE_JOIN.match(kind)
    if m:
        total = int(m.group(1))
        p = (total - 1) // 3
        base, apex = vs[:-1], vs[-1]
        if len(base) != total or not _full_to(G, apex, base):
            return False
        if p == 1:
            return all(G.has_edge(a, b) for a, b in combinations(base, 2))
        blocks = _blocks_from_sizes(base, spindle_sizes(p))
        return blocks is not None and _check_expansion_blocks(G, blocks)
    if kind == "infeasible_expansion":
        from .expansion import feasibility
        if w.sizes is None or k is None and w.param is None:
            return False
        budget_k = k if k is not None else w.param
        blocks = _blocks_from_sizes(vs, w.sizes)
        if blocks is None or not _check_expansion_blocks(G, blocks):
            return False
        rep = feasibility(w.sizes, budget_k)
        return not rep.feasible
    raise ValueError(f"no structural check for witness kind {kind!r}")
