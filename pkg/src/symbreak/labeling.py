"""Vertex/edge labelings, distinguishing predicates and exact D / D' search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotDefined, SearchBudgetExceeded
from .graph import Graph
from .group import AutomorphismGroup, Permutation, automorphisms, edge_permutation

DEFAULT_SEARCH_BUDGET = 10**8


@dataclass(frozen=True)
class VertexLabeling:
    labels: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        _check_labels(self.labels, self.d)


@dataclass(frozen=True)
class EdgeLabeling:
    """Labels indexed by edge id."""

    labels: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        _check_labels(self.labels, self.d)


def _check_labels(labels: Sequence[int], d: int) -> None:
    if d < 1:
        raise ValueError(f"alphabet size must be positive, got {d}")
    for x in labels:
        if not 1 <= x <= d:
            raise ValueError(f"label {x} outside 1..{d}")


def labels_used(labels: Sequence[int]) -> int:
    return len(set(labels))


def preserves_vertex_labeling(p: Permutation, phi: VertexLabeling) -> bool:
    lab = phi.labels
    return all(lab[v] == lab[w] for v, w in enumerate(p))


def preserves_edge_labeling(g: Graph, p: Permutation, L: EdgeLabeling) -> bool:
    lab = L.labels
    return all(lab[e] == lab[f] for e, f in enumerate(edge_permutation(g, p)))


def is_distinguishing_vertex(grp: AutomorphismGroup, phi: VertexLabeling) -> bool:
    return not any(preserves_vertex_labeling(p, phi) for p in grp.nontrivial())


def is_distinguishing_edge(grp: AutomorphismGroup, L: EdgeLabeling) -> bool:
    lab = L.labels
    for q in grp.edge_perms()[1:]:
        if all(lab[e] == lab[f] for e, f in enumerate(q)):
            return False
    return True


class SearchCounter:
    __slots__ = ("count", "budget")

    def __init__(self, budget: int) -> None:
        self.count = 0
        self.budget = budget

    def tick(self) -> None:
        self.count += 1
        if self.count > self.budget:
            raise SearchBudgetExceeded(f"examined more than {self.budget} partial labelings")


def search_distinguishing(perms: Sequence[Sequence[int]], size: int, d: int,
                          counter: SearchCounter | None = None) -> list[int] | None:
    """First distinguishing labeling of points 0..size-1 with labels 1..d, or None.

    ``perms`` are the non-identity group elements acting on the points.
    Labelings are generated depth-first in first-use canonical order (a new
    label may appear only after all smaller ones), so the first hit is the
    lexicographically smallest canonical labeling.
    """
    if counter is None:
        counter = SearchCounter(DEFAULT_SEARCH_BUDGET)
    if not perms:
        return [1] * size
    img = np.asarray(perms, dtype=np.int64).reshape(len(perms), size)
    lab = np.zeros(size, dtype=np.int64)
    for _ in _walk(img, d, lab, counter, canonical=True):
        return [int(v) for v in lab]
    return None


def count_distinguishing(perms: Sequence[Sequence[int]], size: int, d: int,
                         counter: SearchCounter | None = None) -> int:
    """Number of distinguishing labelings of points 0..size-1 over labels 1..d."""
    if counter is None:
        counter = SearchCounter(DEFAULT_SEARCH_BUDGET)
    if not perms:
        return d ** size
    img = np.asarray(perms, dtype=np.int64).reshape(len(perms), size)
    lab = np.zeros(size, dtype=np.int64)
    return sum(1 for _ in _walk(img, d, lab, counter, canonical=False))


def _walk(img: np.ndarray, d: int, lab: np.ndarray, counter: SearchCounter, canonical: bool):
    """Yield once per distinguishing labeling, with ``lab`` holding it.

    Each branch carries the group elements still consistent with its
    partial labeling; it dies when one of them has its whole support
    labeled, since that element then preserves every completion.
    """
    size = img.shape[1]
    moved = img != np.arange(size)[None, :]
    if size == 0 or not moved.any(axis=1).all():
        # some nontrivial element fixes every point
        return
    inv = np.empty_like(img)
    inv[np.arange(img.shape[0])[:, None], img] = np.arange(size)[None, :]
    maxsup = size - 1 - np.argmax(moved[:, ::-1], axis=1)

    def dfs(x: int, alive: np.ndarray, top: int):
        if x == size:
            yield
            return
        gx = img[alive, x]
        gi = inv[alive, x]
        far_gx = gx > x
        far_gi = gi > x
        hi = min(d, top + 1) if canonical else d
        for c in range(1, hi + 1):
            counter.tick()
            lab[x] = c
            ok = (far_gx | (lab[gx] == c)) & (far_gi | (lab[gi] == c))
            nxt = alive[ok]
            if nxt.size and (maxsup[nxt] <= x).any():
                continue
            yield from dfs(x + 1, nxt, max(top, c))
        lab[x] = 0

    yield from dfs(0, np.arange(img.shape[0]), 0)


def _minimal(perms: Sequence[Sequence[int]], size: int, budget: int) -> tuple[int, list[int]]:
    counter = SearchCounter(budget)
    d = 1
    while True:
        found = search_distinguishing(perms, size, d, counter)
        if found is not None:
            return d, found
        d += 1


def distinguishing_number(g: Graph, grp: AutomorphismGroup | None = None,
                          search_budget: int = DEFAULT_SEARCH_BUDGET) -> tuple[int, VertexLabeling]:
    """Least d admitting a distinguishing vertex d-labeling, with a witness."""
    if grp is None:
        grp = automorphisms(g)
    d, lab = _minimal(grp.nontrivial(), g.n, search_budget)
    return d, VertexLabeling(tuple(lab), d)


def find_distinguishing_edge_labeling(grp: AutomorphismGroup, d: int,
                                      search_budget: int = DEFAULT_SEARCH_BUDGET) -> EdgeLabeling | None:
    m = grp.graph.m
    found = search_distinguishing(grp.edge_perms()[1:], m, d, SearchCounter(search_budget))
    if found is None:
        return None
    return EdgeLabeling(tuple(found), d)


def distinguishing_index(g: Graph, grp: AutomorphismGroup | None = None,
                         search_budget: int = DEFAULT_SEARCH_BUDGET) -> tuple[int, EdgeLabeling]:
    """Least d admitting a distinguishing edge d-labeling, with a witness.

    Raises ``NotDefined`` when a nontrivial automorphism fixes every edge.
    """
    if grp is None:
        grp = automorphisms(g)
    perms = grp.edge_perms()[1:]
    if any(all(e == f for e, f in enumerate(q)) for q in perms):
        raise NotDefined("a nontrivial automorphism fixes every edge")
    d, lab = _minimal(perms, g.m, search_budget)
    return d, EdgeLabeling(tuple(lab), d)
