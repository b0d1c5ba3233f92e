"""Cycle-of-cliques (clique expansion) machinery.

Covers recognition via true-twin quotients, the exact two-condition
k-colorability test for odd cycle lengths, the circular color assignment,
and the constructive coloring that repairs the circular assignment's
wraparound clash.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetTooSmall, DisconnectedInput, EvenLength
from .graph import Coloring, Graph, is_connected


@dataclass(frozen=True)
class CliqueExpansion:
    """A cycle of cliques: block i is a clique, consecutive blocks are fully
    joined, non-consecutive blocks have no edges."""

    p: int
    sizes: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]

    def vertex_count(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class FeasibilityReport:
    """Evaluation of the two k-colorability conditions for an odd cycle of
    cliques: no consecutive pair of blocks exceeds k, and the total size is
    at most k*(p-1)/2."""

    k: int
    pair_violation: int | None
    sum_slack: int
    s: int

    @property
    def feasible(self) -> bool:
        return self.pair_violation is None and self.sum_slack >= 0

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "feasible": self.feasible,
            "pair_violation": self.pair_violation,
            "sum_slack": self.sum_slack,
            "s": self.s,
        }


def canonical_sizes(sizes: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest rotation or reflection of a size vector."""
    seq = list(sizes)
    best = None
    for cand in (seq, seq[::-1]):
        for r in range(len(cand)):
            rot = tuple(cand[r:] + cand[:r])
            if best is None or rot < best:
                best = rot
    return best or ()


def recognize_clique_expansion(G: Graph) -> CliqueExpansion | None:
    """Detect whether G is a cycle of cliques of length >= 5.

    True-twin classes (equal closed neighborhoods) become blocks; success
    means the quotient over those classes is a single chordless cycle.  The
    returned orientation is canonical: lexicographically smallest size
    vector, ties broken by the parts' vertex lists.
    """
    if G.n == 0:
        return None
    if not is_connected(G):
        raise DisconnectedInput("expansion recognition needs a connected graph")
    closed = [G.adj[v] | {v} for v in range(G.n)]
    classes: list[list[int]] = []
    index: dict[frozenset[int], int] = {}
    for v in range(G.n):
        key = frozenset(closed[v])
        if key in index:
            classes[index[key]].append(v)
        else:
            index[key] = len(classes)
            classes.append([v])
    q = len(classes)
    if q < 5:
        return None
    # quotient adjacency: class reps carry the relation
    reps = [c[0] for c in classes]
    qadj = [set() for _ in range(q)]
    for i in range(q):
        for j in range(i + 1, q):
            if G.has_edge(reps[i], reps[j]):
                qadj[i].add(j)
                qadj[j].add(i)
    if any(len(a) != 2 for a in qadj):
        return None
    # walk the quotient cycle; it must be a single cycle through all classes
    start = 0
    order = [start]
    prev, cur = start, min(qadj[start])
    while cur != start:
        order.append(cur)
        nxt = [x for x in qadj[cur] if x != prev]
        prev, cur = cur, nxt[0]
    if len(order) != q:
        return None
    sizes = [len(classes[i]) for i in order]
    parts = [tuple(sorted(classes[i])) for i in order]
    # canonical orientation: min size vector, then min parts
    best = None
    for seq_s, seq_p in ((sizes, parts), (sizes[::-1], parts[::-1])):
        for r in range(q):
            cand_s = tuple(seq_s[r:] + seq_s[:r])
            cand_p = tuple(seq_p[r:] + seq_p[:r])
            key = (cand_s, cand_p)
            if best is None or key < best:
                best = key
    return CliqueExpansion(q, best[0], best[1])


def feasibility(sizes: tuple[int, ...], k: int) -> FeasibilityReport:
    """Evaluate both k-colorability conditions for an odd size vector."""
    p = len(sizes)
    if p < 3 or p % 2 == 0:
        raise EvenLength(f"size vector length must be odd >= 3, got {p}")
    if k < 3:
        raise BudgetTooSmall(f"color budget must be >= 3, got {k}")
    if any(s < 1 for s in sizes):
        raise ValueError("block sizes must be >= 1")
    n_half = (p - 1) // 2
    pair_violation = None
    for i in range(p):
        if sizes[i] + sizes[(i + 1) % p] > k:
            pair_violation = i
            break
    sum_slack = n_half * k - sum(sizes)
    s = sizes[0] + sizes[2 * n_half - 1] + sizes[2 * n_half] - k if p >= 3 else 0
    return FeasibilityReport(k, pair_violation, sum_slack, s)


def kcc_assign(sizes: tuple[int, ...], k: int) -> Coloring:
    """Raw circular assignment: the m-th vertex of the concatenated blocks
    gets color ((m-1) mod k) + 1.  Not guaranteed proper at the wraparound."""
    if not sizes or k < 1:
        raise ValueError("need a nonempty size vector and k >= 1")
    total = sum(sizes)
    return Coloring(tuple((m % k) + 1 for m in range(total)), k)


def _block_ranges(sizes: tuple[int, ...]) -> list[tuple[int, int]]:
    out = []
    pos = 0
    for s in sizes:
        out.append((pos, pos + s))
        pos += s
    return out


def expansion_color(sizes: tuple[int, ...], k: int) -> Coloring | None:
    """Proper k-coloring of the expansion when the two conditions hold.

    Phase one runs the circular assignment.  If the first, last and
    next-to-last blocks jointly overshoot the palette (s > 0), phase two
    finds the first even block whose assigned colors form a low run of
    length >= s starting right after some m, keeps the assignment up to that
    block, recolors later odd blocks with 1..m then k, k-1, ... and later
    even blocks with m+1, m+2, ...; the final block takes leftover colors.
    With s <= 0 the circular assignment cut before the final block already
    completes greedily.  Returns None when infeasible.
    """
    rep = feasibility(sizes, k)
    if not rep.feasible:
        return None

    # the construction fixes block 1; some inputs only admit the run block
    # in a rotated orientation, so try all rotations and reflections
    p = len(sizes)
    seqs = []
    base = list(sizes)
    for seq in (base, base[::-1]):
        for r in range(p):
            seqs.append((tuple(seq[r:] + seq[:r]), r, seq is not base or r > 0))
    for rot_sizes, _, _ in seqs:
        colors = _color_rotation(rot_sizes, k)
        if colors is not None:
            return _unrotate(sizes, rot_sizes, colors, k)
    return None


def _color_rotation(sizes: tuple[int, ...], k: int) -> list[int] | None:
    """Run the constructive scheme with block 1 = sizes[0]; None if no valid
    run block exists in this orientation."""
    p = len(sizes)
    n_half = (p - 1) // 2
    total = sum(sizes)
    ranges = _block_ranges(sizes)
    s = sizes[0] + sizes[2 * n_half - 1] + sizes[2 * n_half] - k

    colors = [0] * total
    k1 = sizes[0]

    def assign_circular(upto_block: int) -> None:
        for b in range(upto_block):
            lo, hi = ranges[b]
            for pos in range(lo, hi):
                colors[pos] = (pos % k) + 1

    def fill_final() -> bool:
        lo, hi = ranges[p - 1]
        prev_lo, prev_hi = ranges[p - 2]
        used = set(range(1, k1 + 1)) | {colors[i] for i in range(prev_lo, prev_hi)}
        avail = [c for c in range(1, k + 1) if c not in used]
        if len(avail) < sizes[p - 1]:
            return False
        for off, pos in enumerate(range(lo, hi)):
            colors[pos] = avail[off]
        return True

    if s <= 0:
        assign_circular(p - 1)
        return colors if fill_final() else None

    # find the smallest even block 2l whose circular colors start at m+1 and
    # give a run of length >= s inside {1..k1} without wrapping past k
    chosen = None
    for l in range(1, n_half + 1):
        b = 2 * l - 1  # 0-based index of block 2l
        lo, _ = ranges[b]
        a = (lo % k) + 1
        m = a - 1
        if a + sizes[b] - 1 > k:
            continue  # wraps past the palette
        run = min(sizes[b], k1 - m)
        if run >= s:
            chosen = (l, m)
            break
    if chosen is None:
        return None
    l, m = chosen
    assign_circular(2 * l)
    for j in range(l, n_half):  # odd blocks 2j+1, 0-based index 2j
        lo, hi = ranges[2 * j]
        size = hi - lo
        low = list(range(1, min(m, size) + 1))
        high = [k - t for t in range(size - len(low))]
        for pos, c in zip(range(lo, hi), low + high):
            colors[pos] = c
    for j in range(l + 1, n_half + 1):  # even blocks 2j, 0-based index 2j-1
        lo, hi = ranges[2 * j - 1]
        for off, pos in enumerate(range(lo, hi)):
            colors[pos] = m + 1 + off
    return colors if fill_final() else None


def _unrotate(
    orig_sizes: tuple[int, ...],
    rot_sizes: tuple[int, ...],
    rot_colors: list[int],
    k: int,
) -> Coloring:
    """Map a coloring computed on a rotated/reflected size vector back to the
    original block order."""
    p = len(orig_sizes)
    orig_ranges = _block_ranges(orig_sizes)
    # find which orientation produced rot_sizes (first match, deterministic)
    base = list(orig_sizes)
    for reflected, seq in ((False, base), (True, base[::-1])):
        for r in range(p):
            if tuple(seq[r:] + seq[:r]) != rot_sizes:
                continue
            rot_ranges = _block_ranges(rot_sizes)
            colors = [0] * sum(orig_sizes)
            for jrot in range(p):
                jseq = (jrot + r) % p
                jorig = (p - 1 - jseq) if reflected else jseq
                lo_o, hi_o = orig_ranges[jorig]
                lo_r, hi_r = rot_ranges[jrot]
                for off in range(hi_o - lo_o):
                    colors[lo_o + off] = rot_colors[lo_r + off]
            return Coloring(tuple(colors), k)
    raise AssertionError("rotation bookkeeping failed")
