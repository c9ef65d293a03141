"""Rooted tree isomorphism and the bicentric tree family whose index exceeds D by one."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NotATree, OrderTooSmall, UnsupportedSize
from .graph import Graph, components, induced_subgraph, is_tree, tree_center
from .group import automorphisms
from .labeling import DEFAULT_SEARCH_BUDGET, SearchCounter, count_distinguishing, distinguishing_number

MAX_TREE_N = 16


@dataclass(frozen=True)
class RootedTree:
    graph: Graph
    root: int

    def __post_init__(self) -> None:
        if not is_tree(self.graph):
            raise NotATree("rooted tree needs a tree")
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} out of range")


def ahu_code(t: RootedTree) -> tuple:
    """Bottom-up canonical name: a vertex is the sorted tuple of its children's names."""
    g = t.graph
    parent = {t.root: -1}
    order = [t.root]
    for u in order:
        for w in g.adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    code: dict[int, tuple] = {}
    for u in reversed(order):
        code[u] = tuple(sorted(code[w] for w in g.adj[u] if w != parent[u]))
    return code[t.root]


def rooted_isomorphic(a: RootedTree, b: RootedTree) -> bool:
    return a.graph.n == b.graph.n and ahu_code(a) == ahu_code(b)


def root_fixing_automorphisms(t: RootedTree):
    colors = [1 if v == t.root else 0 for v in range(t.graph.n)]
    return automorphisms(t.graph, colors=colors)


def count_distinguishing_edge_labelings_rooted(t: RootedTree, d: int,
                                               search_budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Distinguishing edge labelings over 1..d, counted up to root-fixing automorphisms.

    A distinguishing labeling has a trivial stabilizer, so its orbit has
    exactly |group| members and the class count is a plain division.
    """
    if d < 1:
        raise ValueError("d must be positive")
    grp = root_fixing_automorphisms(t)
    hits = count_distinguishing(grp.edge_perms()[1:], t.graph.m, d, SearchCounter(search_budget))
    assert hits % grp.order == 0
    return hits // grp.order


@dataclass(frozen=True)
class TreeFamilyReport:
    bicentric: bool
    central_edge: tuple[int, int] | None
    halves_isomorphic: bool
    D: int
    unique_count: int | None
    in_family: bool
    predicted_index: int

    def to_dict(self) -> dict:
        return {
            "bicentric": self.bicentric,
            "central_edge": list(self.central_edge) if self.central_edge else None,
            "halves_isomorphic": self.halves_isomorphic,
            "D": self.D,
            "unique_count": self.unique_count,
            "in_family": self.in_family,
            "predicted_index": self.predicted_index,
        }


def split_at_central_edge(t: Graph, v: int, w: int) -> tuple[RootedTree, RootedTree]:
    """Components of ``t`` minus edge vw, rooted at v and at w respectively."""
    rest = Graph(t.n, [e for e in t.edges if e != (min(v, w), max(v, w))])
    halves = {}
    for comp in components(rest):
        sub, back = induced_subgraph(t, comp)
        for r in (v, w):
            if r in comp:
                halves[r] = RootedTree(sub, back.index(r))
    return halves[v], halves[w]


def family_T_membership(t: Graph, search_budget: int = DEFAULT_SEARCH_BUDGET,
                        D: int | None = None) -> TreeFamilyReport:
    """Membership in the family of trees with distinguishing index D + 1.

    Conditions: bicentric, root-isomorphic halves, and a unique (up to
    root-fixing automorphisms) distinguishing edge labeling of a half with
    D(T) labels.
    """
    if not is_tree(t):
        raise NotATree("family membership is defined for trees only")
    if t.n < 3:
        raise OrderTooSmall(f"trees of order >= 3 required, got {t.n}")
    if D is None:
        D, _ = distinguishing_number(t, search_budget=search_budget)
    center = tree_center(t)
    if len(center) == 1:
        return TreeFamilyReport(False, None, False, D, None, False, D)
    v, w = center
    tv, tw = split_at_central_edge(t, v, w)
    iso = rooted_isomorphic(tv, tw)
    unique = count_distinguishing_edge_labelings_rooted(tv, D, search_budget)
    member = iso and unique == 1
    return TreeFamilyReport(True, (v, w), iso, D, unique, member, D + 1 if member else D)


def _free_tree_code(g: Graph) -> tuple:
    return min(ahu_code(RootedTree(g, c)) for c in tree_center(g))


def enumerate_trees(n: int, max_n: int = MAX_TREE_N) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Grown leaf by leaf from the previous level, deduplicated by the
    center-rooted canonical name; output sorted by that name.
    """
    if n < 1 or n > max_n:
        raise UnsupportedSize(f"tree enumeration supports 1 <= n <= {max_n}, got {n}")
    level = {_free_tree_code(Graph(1)): Graph(1)}
    for k in range(2, n + 1):
        nxt: dict[tuple, Graph] = {}
        for parent in level.values():
            for u in range(k - 1):
                child = Graph(k, list(parent.edges) + [(u, k - 1)])
                nxt.setdefault(_free_tree_code(child), child)
        level = nxt
    for code in sorted(level):
        yield level[code]
