"""Simple cycles of undirected graphs, in canonical form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CycleBudgetExceeded
from .graph import Graph

DEFAULT_CYCLE_BUDGET = 10**6


def canonical_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation/reflection of a cyclic sequence."""
    k = len(seq)
    fwd = list(seq)
    rev = fwd[::-1]
    best = None
    for base in (fwd, rev):
        for r in range(k):
            cand = tuple(base[r:] + base[:r])
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle; ``vertex_seq`` is canonical, ``edge_ids`` index the host graph."""

    vertex_seq: tuple[int, ...]
    edge_ids: frozenset[int]

    @classmethod
    def from_vertices(cls, g: Graph, seq: Sequence[int]) -> "Cycle":
        seq = tuple(seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise ValueError(f"not a simple cycle: {seq}")
        k = len(seq)
        try:
            eids = frozenset(g.edge_id(seq[i], seq[(i + 1) % k]) for i in range(k))
        except KeyError:
            raise ValueError(f"{seq} is not a cycle of the graph") from None
        return cls(canonical_sequence(seq), eids)

    def __len__(self) -> int:
        return len(self.vertex_seq)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_seq)

    def oriented_edges(self) -> list[tuple[int, int]]:
        """Consecutive vertex pairs along the canonical orientation."""
        k = len(self.vertex_seq)
        return [(self.vertex_seq[i], self.vertex_seq[(i + 1) % k]) for i in range(k)]


def enumerate_cycles(g: Graph, budget: int = DEFAULT_CYCLE_BUDGET) -> list[Cycle]:
    """Every simple cycle exactly once, sorted by (length, vertex_seq).

    Each cycle is grown by DFS from its smallest vertex ``s`` through larger
    vertices only; requiring ``path[1] < path[-1]`` keeps one orientation.
    """
    found: list[Cycle] = []
    n = g.n
    nbrs = [sorted(a) for a in g.adj]
    for s in range(n):
        path = [s]
        on_path = [False] * n
        on_path[s] = True
        # explicit stack of neighbor iterators
        stack = [iter(w for w in nbrs[s] if w > s)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if on_path[nxt]:
                continue
            path.append(nxt)
            on_path[nxt] = True
            if len(path) >= 3 and path[1] < path[-1] and g.has_edge(nxt, s):
                found.append(Cycle.from_vertices(g, path))
                if len(found) > budget:
                    raise CycleBudgetExceeded(f"more than {budget} cycles")
            stack.append(iter(w for w in nbrs[nxt] if w > s))
    found.sort(key=lambda c: (len(c), c.vertex_seq))
    return found
