"""Structural equality certificates for the localized bounds.

Each bound comes with a characterization of the graphs attaining it:

* vertex bound: delete vertices of degree < t-1, every component of what
  remains must be a clique;
* edge/path bound: delete edges whose longest path is too short to carry a
  K_t, every component of what remains must be a clique;
* cycle bound (conjectured): delete edges whose longest cycle is shorter
  than t, what remains must be a block forest.

Certificates are always computed independently of the equality flags so the
"if and only if" claims are tested empirically rather than assumed; a
discrepancy between the two is a first-class outcome, not an error.

For the vertex side the threshold deletion is iterated to its fixed point
(the (t-1)-core) before the equality/certificate pair is compared: one
deletion round can drop surviving degrees below the threshold again, and the
characterization is only meaningful once the graph is stable under the
reduction. Both the reduced and the unreduced comparisons are reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import equals_count, local_edge_cycle_bound, local_edge_path_bound, local_vertex_bound
from .cliques import count_cliques
from .graph import Graph, connected_components, delete_edges, induced_subgraph, is_clique, iter_bits, write_graph6
from .weights import WeightMap, all_weights, block_decomposition, block_vertex_sets

VERDICT_BOTH_HOLD = "both-hold"
VERDICT_BOTH_FAIL = "both-fail"
VERDICT_DISCREPANCY = "discrepancy"
VERDICT_EXEMPT = "exempt"


@dataclass
class EqualityCertificate:
    """Outcome of one structural extremality check."""

    kind: str
    holds: bool
    evidence: int | None  # offending component/block as a vertex bitmask, original ids
    reduced_graph6: str
    description: str

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "holds": self.holds,
            "evidence": sorted(iter_bits(self.evidence)) if self.evidence is not None else None,
            "reduced_graph6": self.reduced_graph6,
            "description": self.description,
        }


def x_set(g: Graph, t: int) -> int:
    """Vertices with degree >= t-1 (the only ones that can lie in a K_t)."""
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    mask = 0
    for v in range(g.n):
        if g.degree(v) >= t - 1:
            mask |= 1 << v
    return mask


def x_core(g: Graph, t: int) -> int:
    """Fixed point of the degree-threshold deletion: the (t-1)-core, as a bitmask."""
    surviving = g.vertex_mask()
    while True:
        dropped = 0
        for v in iter_bits(surviving):
            if (g.adj[v] & surviving).bit_count() < t - 1:
                dropped |= 1 << v
        if not dropped:
            return surviving
        surviving &= ~dropped


def z_set(g: Graph, weights: WeightMap, t: int) -> list[tuple[int, int]]:
    """Edges with p(e) + 1 < t; no K_t can contain them."""
    if t < 2:
        raise ValueError(f"clique order must be >= 2, got {t}")
    return [e for e, p in weights.p.items() if p + 1 < t]


def w_set(g: Graph, weights: WeightMap, t: int) -> list[tuple[int, int]]:
    """Edges with c(e) < t; no K_t can contain them."""
    if t < 2:
        raise ValueError(f"clique order must be >= 2, got {t}")
    return [e for e, c in weights.c.items() if c < t]


def _clique_components_certificate(
    g: Graph, reduced: Graph, id_map: tuple[int, ...] | None, kind: str, description: str
) -> EqualityCertificate:
    evidence = None
    holds = True
    for comp in connected_components(reduced):
        if not is_clique(reduced, comp):
            holds = False
            if id_map is None:
                evidence = comp
            else:
                evidence = 0
                for i in iter_bits(comp):
                    evidence |= 1 << id_map[i]
            break
    return EqualityCertificate(kind, holds, evidence, write_graph6(reduced), description)


def vertex_equality_certificate(g: Graph, t: int) -> EqualityCertificate:
    """Every component of the graph induced on the degree-threshold set is a clique."""
    keep = x_set(g, t)
    reduced, id_map = induced_subgraph(g, keep)
    return _clique_components_certificate(
        g, reduced, id_map, "vertex", f"components of induced subgraph on degree >= {t - 1} vertices"
    )


def vertex_core_certificate(g: Graph, t: int) -> EqualityCertificate:
    """Same check on the (t-1)-core, where the reduction is stable."""
    keep = x_core(g, t)
    reduced, id_map = induced_subgraph(g, keep)
    return _clique_components_certificate(
        g, reduced, id_map, "vertex-core", f"components of the {t - 1}-core"
    )


def edge_equality_certificate(g: Graph, weights: WeightMap, t: int) -> EqualityCertificate:
    """Every component after deleting short-path edges is a clique (vertices kept)."""
    stripped = delete_edges(g, z_set(g, weights, t))
    return _clique_components_certificate(
        g, stripped, None, "edge", f"components after deleting edges with p(e)+1 < {t}"
    )


def cycle_equality_certificate(g: Graph, weights: WeightMap, t: int) -> EqualityCertificate:
    """The graph minus short-cycle edges is a block forest."""
    stripped = delete_edges(g, w_set(g, weights, t))
    evidence = None
    holds = True
    decomp = block_decomposition(stripped)
    for mask in block_vertex_sets(decomp):
        if not is_clique(stripped, mask):
            holds = False
            evidence = mask
            break
    return EqualityCertificate(
        "cycle",
        holds,
        evidence,
        write_graph6(stripped),
        f"block structure after deleting edges with c(e) < {t}",
    )


def _verdict(equality: bool, certificate: bool) -> str:
    if equality and certificate:
        return VERDICT_BOTH_HOLD
    if not equality and not certificate:
        return VERDICT_BOTH_FAIL
    return VERDICT_DISCREPANCY


@dataclass
class CrossValidation:
    """Equality flags versus certificates for the vertex and edge theorems at one t.

    The vertex verdict compares the pair evaluated on the (t-1)-core; the
    unreduced pair is carried alongside. The paper claims the vertex
    characterization for t >= 2 and the edge one for t >= 3, so verdicts
    outside those ranges are "exempt".
    """

    t: int
    vertex_equality: bool
    vertex_certificate: bool
    vertex_core_equality: bool
    vertex_core_certificate: bool
    vertex_core_graph6: str
    vertex_verdict: str
    edge_equality: bool | None
    edge_certificate: bool | None
    edge_verdict: str

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "vertex": {
                "equality": self.vertex_equality,
                "certificate": self.vertex_certificate,
                "core_equality": self.vertex_core_equality,
                "core_certificate": self.vertex_core_certificate,
                "core_graph6": self.vertex_core_graph6,
                "verdict": self.vertex_verdict,
            },
            "edge": {
                "equality": self.edge_equality,
                "certificate": self.edge_certificate,
                "verdict": self.edge_verdict,
            },
        }


def cross_validate(g: Graph, t: int, weights: WeightMap | None = None) -> CrossValidation:
    """Test the equality characterizations on one graph at one clique order."""
    if t < 1:
        raise ValueError(f"clique order must be >= 1, got {t}")
    count = count_cliques(g, t).total

    vertex_equality = equals_count(count, local_vertex_bound(g, t))
    vertex_certificate = vertex_equality_certificate(g, t).holds

    core_mask = x_core(g, t)
    core, _ = induced_subgraph(g, core_mask)
    core_count = count_cliques(core, t).total
    vertex_core_equality = equals_count(core_count, local_vertex_bound(core, t))
    core_cert = vertex_core_certificate(g, t)
    vertex_core_certificate_holds = core_cert.holds

    if t >= 2:
        vertex_verdict = _verdict(vertex_core_equality, vertex_core_certificate_holds)
    else:
        vertex_verdict = VERDICT_EXEMPT

    if t >= 2:
        if weights is None:
            weights = all_weights(g)
        edge_equality = equals_count(count, local_edge_path_bound(g, weights, t))
        edge_certificate = edge_equality_certificate(g, weights, t).holds
        edge_verdict = _verdict(edge_equality, edge_certificate) if t >= 3 else VERDICT_EXEMPT
    else:
        edge_equality = None
        edge_certificate = None
        edge_verdict = VERDICT_EXEMPT

    return CrossValidation(
        t=t,
        vertex_equality=vertex_equality,
        vertex_certificate=vertex_certificate,
        vertex_core_equality=vertex_core_equality,
        vertex_core_certificate=vertex_core_certificate_holds,
        vertex_core_graph6=core_cert.reduced_graph6,
        vertex_verdict=vertex_verdict,
        edge_equality=edge_equality,
        edge_certificate=edge_certificate,
        edge_verdict=edge_verdict,
    )


def conjecture_verdict(g: Graph, weights: WeightMap, t: int, count: int | None = None) -> tuple[str, bool, bool]:
    """(verdict, equality, certificate) for the conjectured cycle bound at order t."""
    if count is None:
        count = count_cliques(g, t).total
    equality = equals_count(count, local_edge_cycle_bound(g, weights, t))
    certificate = cycle_equality_certificate(g, weights, t).holds
    verdict = _verdict(equality, certificate) if t >= 3 else VERDICT_EXEMPT
    return verdict, equality, certificate


def is_disjoint_clique_union(g: Graph, size: int) -> bool:
    """True iff every component is a clique on exactly ``size`` vertices."""
    return all(
        comp.bit_count() == size and is_clique(g, comp) for comp in connected_components(g)
    )


def is_clique_union_with_isolated(g: Graph, size: int) -> bool:
    """True iff every component is either K_size or an isolated vertex."""
    for comp in connected_components(g):
        k = comp.bit_count()
        if k == 1:
            continue
        if k != size or not is_clique(g, comp):
            return False
    return True


def is_block_forest_of_kr(g: Graph, r: int) -> bool:
    """True iff every block is a clique on exactly r vertices (isolated vertices allowed)."""
    decomp = block_decomposition(g)
    for mask in block_vertex_sets(decomp):
        if mask.bit_count() != r or not is_clique(g, mask):
            return False
    return True
