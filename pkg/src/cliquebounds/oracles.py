"""Slow, independent reference implementations used to cross-check the fast paths.

These deliberately share no code with the production counters: cliques are
found by testing every vertex subset, and path/cycle weights come from a
subset dynamic program over (vertex set, endpoint) states. Both are exported
so the CLI can run the same cross-checks the test suite runs, but they are
capped well below the production limits.
"""

from __future__ import annotations

from itertools import combinations

from .cliques import CliqueCounts
from .graph import Graph, iter_bits
from .weights import CapExceededError, WeightMap

NAIVE_CLIQUE_CAP = 10
DP_WEIGHT_CAP = 9


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceededError(f"{what} oracle supports n <= {cap}, got n={g.n}")


def naive_count_cliques(g: Graph, t: int) -> CliqueCounts:
    """Count K_t by testing all C(n, t) vertex subsets for completeness."""
    _check_cap(g, NAIVE_CLIQUE_CAP, "subset clique")
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    per_vertex = [0] * g.n
    per_edge = {e: 0 for e in g.edges()}
    total = 0
    for subset in combinations(range(g.n), t):
        if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
            total += 1
            for v in subset:
                per_vertex[v] += 1
            for u, v in combinations(subset, 2):
                per_edge[(u, v)] += 1
    return CliqueCounts(t, total, tuple(per_vertex), per_edge)


def naive_count_all_cliques(g: Graph) -> int:
    return sum(naive_count_cliques(g, t).total for t in range(1, g.n + 1))


def _end_table(g: Graph) -> list[int]:
    """ends[S] = bitmask of vertices a such that some simple path with vertex
    set exactly S ends at a."""
    n = g.n
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for s in range(1, 1 << n):
        reach = ends[s]
        if not reach:
            continue
        for a in iter_bits(reach):
            for b in iter_bits(g.adj[a] & ~s):
                ends[s | (1 << b)] |= 1 << b
    return ends


def _best_subpath_table(ends: list[int], n: int, a: int) -> list[int]:
    """h[S] = max |T| over T subseteq S with a path on vertex set T ending at a."""
    size = 1 << n
    h = [0] * size
    abit = 1 << a
    for s in range(size):
        if not s & abit:
            continue
        best = s.bit_count() if (ends[s] & abit) else 0
        for i in iter_bits(s & ~abit):
            prev = h[s ^ (1 << i)]
            if prev > best:
                best = prev
        h[s] = best
    return h


def _start_table(adj: list[int], n: int, u: int) -> list[int]:
    """frm[S] = endpoint bitmask over simple paths starting at u with vertex set S."""
    frm = [0] * (1 << n)
    frm[1 << u] = 1 << u
    for s in range(1 << n):
        reach = frm[s]
        if not reach:
            continue
        for a in iter_bits(reach):
            for b in iter_bits(adj[a] & ~s):
                frm[s | (1 << b)] |= 1 << b
    return frm


def _p_from_tables(g: Graph, ends: list[int], h_v: list[int], u: int, v: int) -> int:
    full = g.vertex_mask()
    ubit, vbit = 1 << u, 1 << v
    best = 1
    for s in range(1 << g.n):
        if not s & ubit or s & vbit:
            continue
        if not (ends[s] & ubit):
            continue
        other = h_v[full & ~s]
        if other:
            cand = s.bit_count() + other - 1
            if cand > best:
                best = cand
    return best


def _c_from_start_table(frm: list[int], n: int, v: int) -> int:
    # A u-v path of length >= 2 never uses the edge uv itself, so the start
    # table of the unmodified graph suffices; |S| = 2 is exactly the edge.
    vbit = 1 << v
    best = 0
    for s in range(1 << n):
        if frm[s] & vbit and s.bit_count() >= 3:
            length = s.bit_count() - 1
            if length > best:
                best = length
    return best + 1 if best else 2


def dp_longest_path_through_edge(g: Graph, e: tuple[int, int]) -> int:
    """Oracle p(e): combine disjoint one-sided arm sets from the DP table."""
    _check_cap(g, DP_WEIGHT_CAP, "path weight")
    u, v = e if e[0] < e[1] else (e[1], e[0])
    ends = _end_table(g)
    h_v = _best_subpath_table(ends, g.n, v)
    return _p_from_tables(g, ends, h_v, u, v)


def dp_longest_cycle_through_edge(g: Graph, e: tuple[int, int]) -> int:
    """Oracle c(e): 1 + longest u-v path of length >= 2, or 2 if none exists."""
    _check_cap(g, DP_WEIGHT_CAP, "cycle weight")
    u, v = e if e[0] < e[1] else (e[1], e[0])
    frm = _start_table(list(g.adj), g.n, u)
    return _c_from_start_table(frm, g.n, v)


def dp_all_weights(g: Graph) -> WeightMap:
    """Oracle WeightMap from the subset DP, sharing tables across edges."""
    _check_cap(g, DP_WEIGHT_CAP, "weight map")
    ends = _end_table(g)
    h_tables = {v: _best_subpath_table(ends, g.n, v) for v in range(g.n)}
    start_tables: dict[int, list[int]] = {}
    adj = list(g.adj)
    p = {}
    c = {}
    for u, v in g.edges():
        p[(u, v)] = _p_from_tables(g, ends, h_tables[v], u, v)
        if u not in start_tables:
            start_tables[u] = _start_table(adj, g.n, u)
        c[(u, v)] = _c_from_start_table(start_tables[u], g.n, v)
    longest_path = max(p.values(), default=0)
    circumference = max((x for x in c.values() if x >= 3), default=0)
    return WeightMap(g.degrees(), p, c, longest_path, circumference)
