"""Turning a distinguishing vertex labeling into a distinguishing edge labeling.

For a connected graph with a cycle, take the cycle whose Aut-orbit is
smallest and let H be the union of that orbit. Then:

* step 1 labels E(H) from the vertex labels so that any automorphism
  carrying one orbit cycle onto another (or onto itself) while matching edge
  labels also matches the vertex labels along that cycle;
* step 2 labels every other edge with the vertex label of its endpoint
  farther from H, or 1 when both endpoints are equally far.

The result is always re-verified against the full group. When step 1 has no
solution, or the assembled labeling fails verification, a direct search for
a distinguishing edge labeling within the same alphabet is used instead and
the certificate says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cycles import DEFAULT_CYCLE_BUDGET, Cycle, enumerate_cycles
from .errors import (
    ConstructionFailed,
    PreconditionViolated,
    SearchBudgetExceeded,
    Step1Infeasible,
)
from .graph import Graph, has_cycle, is_connected, multi_source_distances
from .group import (
    AutomorphismGroup,
    CycleOrbit,
    Permutation,
    apply_to_cycle,
    automorphisms,
    cycle_orbits,
    smallest_orbit_cycle,
)
from .labeling import (
    DEFAULT_SEARCH_BUDGET,
    EdgeLabeling,
    SearchCounter,
    VertexLabeling,
    find_distinguishing_edge_labeling,
    is_distinguishing_edge,
    is_distinguishing_vertex,
    labels_used,
)

PartialLabeling = dict[int, int]


@dataclass(frozen=True)
class Violation:
    """An automorphism mapping orbit cycle ``source`` onto ``target`` that keeps
    the edge labels but not the vertex labels."""

    element: Permutation
    source: int
    target: int


@dataclass(frozen=True)
class TransferCertificate:
    chosen_cycle: Cycle
    orbit: CycleOrbit
    h_vertices: tuple[int, ...]
    h_edges: tuple[int, ...]
    step1_labels: tuple[int, ...] | None  # aligned with h_edges
    final_labeling: EdgeLabeling
    labels_used: int
    verified: bool
    fallback_used: bool
    fallback_reason: str | None

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)

    def to_dict(self) -> dict:
        return {
            "chosen_cycle": list(self.chosen_cycle.vertex_seq),
            "orbit_size": self.orbit_size,
            "orbit": [list(c.vertex_seq) for c in self.orbit.members],
            "h_vertices": list(self.h_vertices),
            "h_edges": list(self.h_edges),
            "step1_labels": list(self.step1_labels) if self.step1_labels is not None else None,
            "final_labeling": list(self.final_labeling.labels),
            "labels_used": self.labels_used,
            "verified": self.verified,
            "fallback_used": self.fallback_used,
            "fallback_reason": self.fallback_reason,
        }


def orbit_subgraph(orbit: CycleOrbit) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertex set and edge-id set of the union of the orbit's cycles."""
    verts: set[int] = set()
    edges: set[int] = set()
    for c in orbit.members:
        verts.update(c.vertex_seq)
        edges.update(c.edge_ids)
    return tuple(sorted(verts)), tuple(sorted(edges))


def _orbit_constraints(g: Graph, grp: AutomorphismGroup, orbit: CycleOrbit,
                       phi: VertexLabeling) -> tuple[list[frozenset], list[Violation]]:
    """Each non-vacuous (element, cycle) pair as a set of edge pairs that must
    not all carry equal labels.

    Returns the deduplicated constraints plus the pairs that can never be
    satisfied (the element fixes every edge of the cycle).
    """
    lab = phi.labels
    index = {c: i for i, c in enumerate(orbit.members)}
    perms = grp.edge_perms()
    seen: set[frozenset] = set()
    out: list[frozenset] = []
    hopeless: list[Violation] = []
    for p, q in zip(grp.elements, perms):
        for i, c in enumerate(orbit.members):
            if all(lab[v] == lab[p[v]] for v in c.vertex_seq):
                continue
            pairs = frozenset((min(e, q[e]), max(e, q[e])) for e in c.edge_ids if q[e] != e)
            if not pairs:
                hopeless.append(Violation(p, i, index[apply_to_cycle(g, p, c)]))
                continue
            if pairs not in seen:
                seen.add(pairs)
                out.append(pairs)
    return out, hopeless


def check_step1_conditions(g: Graph, grp: AutomorphismGroup, orbit: CycleOrbit,
                           phi: VertexLabeling, partial: PartialLabeling) -> list[Violation]:
    """All (automorphism, cycle) pairs breaking the local transfer conditions.

    An automorphism f sending orbit cycle C_i to C_j (possibly i == j) that
    satisfies L(e) == L(f(e)) on every edge of C_i must also satisfy
    phi(v) == phi(f(v)) on every vertex of C_i.
    """
    lab = phi.labels
    index = {c: i for i, c in enumerate(orbit.members)}
    bad = []
    for p, q in zip(grp.elements, grp.edge_perms()):
        for i, c in enumerate(orbit.members):
            if any(partial[e] != partial[q[e]] for e in c.edge_ids):
                continue
            if any(lab[v] != lab[p[v]] for v in c.vertex_seq):
                bad.append(Violation(p, i, index[apply_to_cycle(g, p, c)]))
    return bad


def naive_transfer(g: Graph, orbit: CycleOrbit, phi: VertexLabeling) -> PartialLabeling:
    """Each cycle edge (v_j, v_j+1) takes phi(v_j) along the canonical
    orientation; shared edges keep the first label they receive."""
    out: PartialLabeling = {}
    for c in orbit.members:
        for u, w in c.oriented_edges():
            out.setdefault(g.edge_id(u, w), phi.labels[u])
    return out


def step1_orbit_cycle_labeling(g: Graph, grp: AutomorphismGroup, orbit: CycleOrbit,
                               phi: VertexLabeling,
                               search_budget: int = DEFAULT_SEARCH_BUDGET) -> PartialLabeling:
    """Labels for E(H) over phi's alphabet satisfying the local transfer conditions.

    The naive transfer is tried first; otherwise the lexicographically first
    solution in edge-id order. Raises ``Step1Infeasible`` if none exists.
    """
    _, h_edges = orbit_subgraph(orbit)
    constraints, hopeless = _orbit_constraints(g, grp, orbit, phi)
    if hopeless:
        raise Step1Infeasible(f"{len(hopeless)} automorphism/cycle pairs fix every cycle edge")

    seed = naive_transfer(g, orbit, phi)
    if all(any(seed[a] != seed[b] for a, b in con) for con in constraints):
        return dict(sorted(seed.items()))

    pos = {e: k for k, e in enumerate(h_edges)}
    by_last: list[list[list[tuple[int, int]]]] = [[] for _ in h_edges]
    for con in constraints:
        pairs = [(pos[a], pos[b]) for a, b in con]
        by_last[max(max(a, b) for a, b in pairs)].append(pairs)
    size = len(h_edges)
    val = [0] * size
    counter = SearchCounter(search_budget)

    # constraints only compare labels, so first-use order loses nothing and
    # the first hit is still the lexicographically smallest solution
    def dfs(x: int, top: int) -> bool:
        if x == size:
            return True
        for c in range(1, min(phi.d, top + 1) + 1):
            counter.tick()
            val[x] = c
            if any(all(val[a] == val[b] for a, b in pairs) for pairs in by_last[x]):
                continue
            if dfs(x + 1, max(top, c)):
                return True
        val[x] = 0
        return False

    if not dfs(0, 0):
        raise Step1Infeasible(f"no labeling of {size} orbit edges over {phi.d} labels")
    return {e: val[k] for k, e in enumerate(h_edges)}


def step2_distance_extension(g: Graph, phi: VertexLabeling, h_vertices: Sequence[int],
                             partial: PartialLabeling) -> EdgeLabeling:
    """Extend ``partial`` (exactly the edges of H) to all edges by distance to H."""
    dist = multi_source_distances(g, h_vertices)
    lab = phi.labels
    out = []
    for e, (x, y) in enumerate(g.edges):
        if e in partial:
            out.append(partial[e])
        elif dist[x] > dist[y]:
            out.append(lab[x])
        elif dist[x] < dist[y]:
            out.append(lab[y])
        else:
            out.append(1)
    return EdgeLabeling(tuple(out), phi.d)


def construct_edge_labeling(g: Graph, phi: VertexLabeling, grp: AutomorphismGroup | None = None,
                            cycles: list[Cycle] | None = None,
                            search_budget: int = DEFAULT_SEARCH_BUDGET,
                            cycle_budget: int = DEFAULT_CYCLE_BUDGET) -> TransferCertificate:
    """Distinguishing edge labeling with no more labels than ``phi`` uses, with an audit trail."""
    if not is_connected(g):
        raise PreconditionViolated("graph must be connected")
    if not has_cycle(g):
        raise PreconditionViolated("graph must contain a cycle")
    if len(phi.labels) != g.n:
        raise PreconditionViolated("vertex labeling does not match the graph")
    if grp is None:
        grp = automorphisms(g)
    if not is_distinguishing_vertex(grp, phi):
        raise PreconditionViolated("vertex labeling is not distinguishing")
    if cycles is None:
        cycles = enumerate_cycles(g, budget=cycle_budget)
    c0, orbit = smallest_orbit_cycle(grp, cycles)
    h_vertices, h_edges = orbit_subgraph(orbit)

    step1: tuple[int, ...] | None = None
    reason = None
    final = None
    try:
        partial = step1_orbit_cycle_labeling(g, grp, orbit, phi, search_budget)
        step1 = tuple(partial[e] for e in h_edges)
        final = step2_distance_extension(g, phi, h_vertices, partial)
        if not is_distinguishing_edge(grp, final):
            reason = "not_distinguishing"
    except Step1Infeasible:
        reason = "step1_infeasible"
    except SearchBudgetExceeded:
        reason = "step1_budget"

    if reason is not None:
        final = find_distinguishing_edge_labeling(grp, phi.d, search_budget)
        if final is None:
            raise ConstructionFailed(f"no distinguishing edge labeling with {phi.d} labels")
    if not is_distinguishing_edge(grp, final):
        raise ConstructionFailed("assembled labeling failed verification")
    return TransferCertificate(
        chosen_cycle=c0,
        orbit=orbit,
        h_vertices=h_vertices,
        h_edges=h_edges,
        step1_labels=step1,
        final_labeling=final,
        labels_used=labels_used(final.labels),
        verified=True,
        fallback_used=reason is not None,
        fallback_reason=reason,
    )


@dataclass(frozen=True)
class OrbitTrial:
    representative: Cycle
    orbit_size: int
    minimal: bool
    step1_feasible: bool
    distinguishing: bool


def orbit_choice_survey(g: Graph, phi: VertexLabeling, grp: AutomorphismGroup | None = None,
                        cycles: list[Cycle] | None = None,
                        search_budget: int = DEFAULT_SEARCH_BUDGET) -> list[OrbitTrial]:
    """Run the local construction (no fallback) on every cycle orbit, not just the smallest."""
    if grp is None:
        grp = automorphisms(g)
    if cycles is None:
        cycles = enumerate_cycles(g)
    orbits = cycle_orbits(grp, cycles)
    smallest = min(len(o) for o in orbits)
    out = []
    for orb in orbits:
        h_vertices, _ = orbit_subgraph(orb)
        try:
            partial = step1_orbit_cycle_labeling(g, grp, orb, phi, search_budget)
        except (Step1Infeasible, SearchBudgetExceeded):
            out.append(OrbitTrial(orb.representative, len(orb), len(orb) == smallest, False, False))
            continue
        final = step2_distance_extension(g, phi, h_vertices, partial)
        out.append(OrbitTrial(orb.representative, len(orb), len(orb) == smallest, True,
                              is_distinguishing_edge(grp, final)))
    return out
