"""Per-edge path and cycle weights, plus block (biconnected) structure.

p(e) is the number of edges on a longest simple path whose edge set contains
e; c(e) is the length of a longest cycle through e, with c(e) = 2 when e lies
on no cycle. Both are exact: a two-sided DFS enumerates path arms on either
side of the edge, pruned by the current best and a reachability upper bound.
No heuristic fallback exists above the vertex cap; bounds computed from
underestimated weights would be unsound, so we fail loudly instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, delete_edges, is_clique, iter_bits, reachable_within

DEFAULT_EXACT_CAP = 20


class CapExceededError(GraphError):
    """Graph too large for an exact search; no silent approximation is made."""


@dataclass
class WeightMap:
    """Degrees plus per-edge path/cycle weights and the global extremes."""

    degrees: tuple[int, ...]
    p: dict[tuple[int, int], int]
    c: dict[tuple[int, int], int]
    longest_path: int
    circumference: int


@dataclass
class BlockDecomposition:
    blocks: list[tuple[tuple[int, int], ...]]
    articulation_points: int


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceededError(
            f"{what} needs exact search; n={g.n} exceeds cap {cap} (raise the cap explicitly to proceed)"
        )


def _check_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) not in graph")
    return (u, v) if u < v else (v, u)


def longest_path_through_edge(g: Graph, e: tuple[int, int], cap: int = DEFAULT_EXACT_CAP) -> int:
    """p(e): edges on the longest simple path containing e (>= 1, the edge itself)."""
    u, v = _check_edge(g, e)
    _check_cap(g, cap, "longest path through an edge")
    adj = g.adj
    full = g.vertex_mask()
    vbit = 1 << v
    best = 1

    def arm_v(end: int, used: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        cand = adj[end] & ~used
        if not cand:
            return
        reach = reachable_within(adj, 1 << end, full & ~used)
        if length + reach.bit_count() <= best:
            return
        for w in iter_bits(cand):
            arm_v(w, used | (1 << w), length + 1)

    def arm_u(end: int, used: int, length: int) -> None:
        # Every completion adds one edge per new vertex, and new vertices must
        # be reachable from the current u-arm tip or from v through unused ones.
        unused = full & ~used & ~vbit
        reach = reachable_within(adj, (1 << end) | vbit, unused)
        if length + 1 + reach.bit_count() <= best:
            return
        arm_v(v, used | vbit, length + 1)
        for w in iter_bits(adj[end] & unused):
            arm_u(w, used | (1 << w), length + 1)

    arm_u(u, 1 << u, 0)
    return best


def _longest_path_between(g: Graph, u: int, v: int) -> int | None:
    """Length of the longest simple u-v path, or None if v is unreachable."""
    adj = g.adj
    full = g.vertex_mask()
    best: int | None = None

    def walk(end: int, used: int, length: int) -> None:
        nonlocal best
        if end == v:
            if best is None or length > best:
                best = length
            return
        allowed = full & ~used
        reach = reachable_within(adj, 1 << end, allowed)
        if not (reach >> v) & 1:
            return
        if best is not None and length + reach.bit_count() <= best:
            return
        for w in iter_bits(adj[end] & allowed):
            walk(w, used | (1 << w), length + 1)

    walk(u, 1 << u, 0)
    return best


def longest_cycle_through_edge(g: Graph, e: tuple[int, int], cap: int = DEFAULT_EXACT_CAP) -> int:
    """c(e): length of the longest cycle through e, or 2 when e lies on no cycle."""
    u, v = _check_edge(g, e)
    _check_cap(g, cap, "longest cycle through an edge")
    stripped = delete_edges(g, [(u, v)])
    path = _longest_path_between(stripped, u, v)
    if path is None:
        return 2
    return path + 1


def all_weights(g: Graph, cap: int = DEFAULT_EXACT_CAP) -> WeightMap:
    """p(e) and c(e) for every edge, with the global longest path and circumference."""
    _check_cap(g, cap, "weight computation")
    p: dict[tuple[int, int], int] = {}
    c: dict[tuple[int, int], int] = {}
    for e in g.edges():
        p[e] = longest_path_through_edge(g, e, cap)
        c[e] = longest_cycle_through_edge(g, e, cap)
    longest_path = max(p.values(), default=0)
    circumference = max((length for length in c.values() if length >= 3), default=0)
    return WeightMap(g.degrees(), p, c, longest_path, circumference)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components as edge sets, plus the articulation points.

    Bridges appear as two-vertex blocks; isolated vertices yield no block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    stack: list[tuple[int, int]] = []
    blocks: list[tuple[tuple[int, int], ...]] = []
    art = 0
    counter = 0

    def dfs(u: int, parent: int) -> None:
        nonlocal counter, art
        counter += 1
        disc[u] = low[u] = counter
        children = 0
        for w in iter_bits(g.adj[u]):
            if disc[w] == -1:
                children += 1
                tree_edge = (min(u, w), max(u, w))
                stack.append(tree_edge)
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    if parent != -1:
                        art |= 1 << u
                    block = []
                    while True:
                        edge = stack.pop()
                        block.append(edge)
                        if edge == tree_edge:
                            break
                    blocks.append(tuple(sorted(block)))
            elif w != parent and disc[w] < disc[u]:
                stack.append((min(u, w), max(u, w)))
                low[u] = min(low[u], disc[w])
        if parent == -1 and children > 1:
            art |= 1 << u

    for root in range(n):
        if disc[root] == -1:
            dfs(root, -1)
    return BlockDecomposition(blocks, art)


def block_vertex_sets(decomp: BlockDecomposition) -> list[int]:
    out = []
    for block in decomp.blocks:
        mask = 0
        for u, v in block:
            mask |= (1 << u) | (1 << v)
        out.append(mask)
    return out


def is_block_forest(g: Graph) -> bool:
    """True iff every block's vertex set induces a clique."""
    decomp = block_decomposition(g)
    return all(is_clique(g, mask) for mask in block_vertex_sets(decomp))
