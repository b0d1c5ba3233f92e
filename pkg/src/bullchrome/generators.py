"""Constructors for the named graph families plus a seeded random generator
of connected pattern-free graphs for the verification harness."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import NotAnObstruction, TooSmall
from .expansion import feasibility
from .graph import Graph, complement, is_connected, join, make_graph
from .patterns import find_fixed_pattern, spindle_sizes

ALL_TWOS_ONE = "all-twos-one"
TWOS_THEN_ONE_THREE_ALT = "twos-then-one-three-alt"


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def antihole(n: int) -> Graph:
    if n < 5:
        raise TooSmall(f"antihole needs n >= 5, got {n}")
    return complement(cycle(n))


def complete(r: int) -> Graph:
    if r < 1:
        raise TooSmall(f"complete graph needs r >= 1, got {r}")
    return make_graph(r, list(combinations(range(r), 2)))


def empty(n: int) -> Graph:
    return make_graph(n, [])


def wheel(rim_len: int) -> Graph:
    if rim_len < 3:
        raise TooSmall(f"wheel needs rim >= 3, got {rim_len}")
    return join(cycle(rim_len), complete(1))


def build_expansion(sizes: tuple[int, ...]) -> Graph:
    """Cycle of cliques with blocks laid out consecutively: block i occupies
    the vertex range right after block i-1, which is also the circular
    assignment's vertex order."""
    if len(sizes) < 3 or any(s < 1 for s in sizes):
        raise TooSmall("need at least 3 blocks, each of size >= 1")
    starts = []
    pos = 0
    for s in sizes:
        starts.append(pos)
        pos += s
    blocks = [list(range(starts[i], starts[i] + sizes[i]))
              for i in range(len(sizes))]
    edges: list[tuple[int, int]] = []
    for i, blk in enumerate(blocks):
        edges.extend(combinations(blk, 2))
        nxt = blocks[(i + 1) % len(blocks)]
        if nxt is not blk:
            edges.extend((a, b) for a in blk for b in nxt)
    return make_graph(pos, edges)


def spindle(p: int) -> Graph:
    """The (3p+1)-vertex spindle; p=1 is K4, larger p the alternating
    2,1,...,2,1,1 cycle of cliques."""
    if p < 1:
        raise TooSmall(f"spindle needs p >= 1, got {p}")
    if p == 1:
        return complete(4)
    return build_expansion(spindle_sizes(p))


def exceptional(k: int, i: int, variant: str) -> Graph:
    """One of the minimal non-k-colorable cycle-of-cliques families.

    all-twos-one: [2, 2, ..., 2, 1]; twos-then-one-three-alt:
    [2, 2, 1, 3, 1, 3, ..., 1].  The construction asserts that the size
    vector satisfies the pairwise condition but violates the sum condition
    for the given budget; if not, NotAnObstruction is raised.
    """
    if k not in (4, 5):
        raise ValueError(f"budget must be 4 or 5, got {k}")
    if i < 2:
        raise TooSmall(f"cycle index must be >= 2, got {i}")
    if variant == ALL_TWOS_ONE:
        sizes = tuple([2] * (2 * i) + [1])
    elif variant == TWOS_THEN_ONE_THREE_ALT:
        sizes = tuple([2, 2] + [1, 3] * (i - 1) + [1])
    else:
        raise ValueError(f"unknown variant {variant!r}")
    rep = feasibility(sizes, k)
    if rep.pair_violation is not None or rep.sum_slack >= 0:
        raise NotAnObstruction(
            f"{variant} with i={i} is not a budget-{k} obstruction "
            f"(pair_violation={rep.pair_violation}, sum_slack={rep.sum_slack})")
    return build_expansion(sizes)


def random_hfree(
    n: int,
    edge_prob: float,
    forbidden: list[str],
    seed: int,
    max_tries: int = 100,
) -> Graph | None:
    """Seeded G(n, p) sample repaired into a connected pattern-free graph.

    While a forbidden witness exists, one edge inside the witness (chosen
    from the seed stream) is deleted; after n^2 repairs or a connectivity
    failure the attempt restarts from a fresh sample.  Deterministic for
    fixed arguments.  Returns None after max_tries failed attempts.
    """
    if n < 1 or not 0 <= edge_prob <= 1:
        raise ValueError("need n >= 1 and 0 <= edge_prob <= 1")
    patterns = [_parse(tok) for tok in forbidden]
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(max_tries):
        edges = {pair for pair in pairs if rng.random() < edge_prob}
        ok = True
        for _ in range(n * n):
            G = make_graph(n, edges)
            w = _first_witness(G, patterns)
            if w is None:
                break
            wedges = sorted(
                (u, v) for u, v in combinations(sorted(w.vertices), 2)
                if G.has_edge(u, v))
            victim = wedges[rng.randrange(len(wedges))]
            edges.discard(victim)
        else:
            ok = False
        if not ok:
            continue
        G = make_graph(n, edges)
        if _first_witness(G, patterns) is None and is_connected(G):
            return G
    return None


def _parse(token: str):
    from .patterns import parse_pattern_token

    return parse_pattern_token(token)


def _first_witness(G: Graph, patterns):
    for kind, r in patterns:
        w = find_fixed_pattern(G, kind, r)
        if w is not None:
            return w
    return None
