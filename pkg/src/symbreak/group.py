"""Automorphism groups by exhaustive backtracking, and orbits of vertices and cycles.

Groups are kept as complete element lists; at the sizes this package targets
that makes every preservation and orbit computation a direct quantification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cycles import Cycle
from .errors import GroupBudgetExceeded, NoCycles
from .graph import Graph, distance_matrix

DEFAULT_GROUP_BUDGET = 10**7

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``: v -> p[q[v]]."""
    return tuple(p[x] for x in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for v, w in enumerate(p):
        inv[w] = v
    return tuple(inv)


def edge_permutation(g: Graph, p: Permutation) -> tuple[int, ...]:
    """Induced action on edge ids: edge e maps to ``result[e]``."""
    return tuple(g.edge_id(p[u], p[v]) for u, v in g.edges)


def refined_colors(g: Graph, colors: Sequence[int] | None = None,
                   dist: list[list[int]] | None = None) -> list[int]:
    """Isomorphism-invariant vertex classes.

    Starts from (given color, degree, distance profile) and runs colour
    refinement on neighbour colour multisets until the partition is stable.
    """
    if dist is None:
        dist = distance_matrix(g)
    base = colors if colors is not None else [0] * g.n
    sig = [(base[v], g.degree(v), tuple(sorted(dist[v]))) for v in range(g.n)]
    cur = _relabel(sig)
    while True:
        sig = [(cur[v], tuple(sorted(cur[w] for w in g.adj[v]))) for v in range(g.n)]
        nxt = _relabel(sig)
        if len(set(nxt)) == len(set(cur)):
            return nxt
        cur = nxt


def _relabel(sig: list) -> list[int]:
    table = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [table[s] for s in sig]


@dataclass(frozen=True)
class AutomorphismGroup:
    graph: Graph
    elements: tuple[Permutation, ...]
    _edge_perms: list = field(default_factory=list, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def nontrivial(self) -> tuple[Permutation, ...]:
        # element order is sorted, so the identity is always first
        return self.elements[1:]

    def edge_perms(self) -> list[tuple[int, ...]]:
        """Edge action of every element, aligned with ``elements``; cached."""
        if not self._edge_perms:
            self._edge_perms.extend(edge_permutation(self.graph, p) for p in self.elements)
        return self._edge_perms


def automorphisms(g: Graph, colors: Sequence[int] | None = None,
                  budget: int = DEFAULT_GROUP_BUDGET) -> AutomorphismGroup:
    """All automorphisms of ``g`` (preserving ``colors`` if given), sorted.

    Vertices are mapped one at a time; a candidate image must share the
    refined class and reproduce every distance to already-mapped vertices,
    so each complete map is distance-preserving and hence an automorphism.
    """
    n = g.n
    dist = distance_matrix(g)
    cls = refined_colors(g, colors, dist)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(cls[v], []).append(v)
    # most constrained vertices first; after the first choice, prefer
    # neighbours of mapped vertices
    order: list[int] = []
    placed = [False] * n
    while len(order) < n:
        frontier = [v for v in range(n) if not placed[v]
                    and (not order or any(placed[w] for w in g.adj[v]))]
        if not frontier:
            frontier = [v for v in range(n) if not placed[v]]
        v = min(frontier, key=lambda x: (len(members[cls[x]]), x))
        order.append(v)
        placed[v] = True

    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(i: int) -> None:
        if i == n:
            found.append(tuple(image))
            if len(found) > budget:
                raise GroupBudgetExceeded(f"automorphism group larger than {budget}")
            return
        v = order[i]
        dv = dist[v]
        for w in members[cls[v]]:
            if used[w]:
                continue
            dw = dist[w]
            if all(dv[order[j]] == dw[image[order[j]]] for j in range(i)):
                image[v] = w
                used[w] = True
                extend(i + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    found.sort()
    return AutomorphismGroup(g, tuple(found))


def vertex_orbits(grp: AutomorphismGroup) -> list[list[int]]:
    n = grp.graph.n
    seen = [False] * n
    out = []
    for v in range(n):
        if seen[v]:
            continue
        orb = sorted({p[v] for p in grp.elements})
        for w in orb:
            seen[w] = True
        out.append(orb)
    return out


def edge_orbits(grp: AutomorphismGroup) -> list[list[int]]:
    m = grp.graph.m
    seen = [False] * m
    out = []
    perms = grp.edge_perms()
    for e in range(m):
        if seen[e]:
            continue
        orb = sorted({q[e] for q in perms})
        for f in orb:
            seen[f] = True
        out.append(orb)
    return out


def apply_to_cycle(g: Graph, p: Permutation, c: Cycle) -> Cycle:
    return Cycle.from_vertices(g, [p[v] for v in c.vertex_seq])


@dataclass(frozen=True)
class CycleOrbit:
    """Setwise images of a cycle under the group, sorted by (length, vertex_seq)."""

    members: tuple[Cycle, ...]

    @property
    def representative(self) -> Cycle:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def index(self, c: Cycle) -> int:
        return self.members.index(c)


def cycle_orbit(grp: AutomorphismGroup, c: Cycle) -> CycleOrbit:
    g = grp.graph
    imgs = {apply_to_cycle(g, p, c) for p in grp.elements}
    return CycleOrbit(tuple(sorted(imgs, key=lambda x: (len(x), x.vertex_seq))))


def cycle_orbits(grp: AutomorphismGroup, cycles: Iterable[Cycle]) -> list[CycleOrbit]:
    """Partition ``cycles`` into orbits, ordered by their representatives."""
    todo = sorted(cycles, key=lambda x: (len(x), x.vertex_seq))
    assigned: set[Cycle] = set()
    out = []
    for c in todo:
        if c in assigned:
            continue
        orb = cycle_orbit(grp, c)
        assigned.update(orb.members)
        out.append(orb)
    return out


def smallest_orbit_cycle(grp: AutomorphismGroup, cycles: Sequence[Cycle]) -> tuple[Cycle, CycleOrbit]:
    """Cycle with the smallest orbit; ties go to the shortest, then lexicographically
    smallest representative."""
    if not cycles:
        raise NoCycles("graph has no cycles")
    orbits = cycle_orbits(grp, cycles)
    best = min(orbits, key=lambda o: (len(o), len(o.representative), o.representative.vertex_seq))
    return best.representative, best
