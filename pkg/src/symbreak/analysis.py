"""Per-graph analysis records shared by the CLI commands."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import NotDefined, SymbreakError
from .graph import Graph, has_cycle, is_connected, is_tree
from .graph6 import encode_graph6
from .group import DEFAULT_GROUP_BUDGET, automorphisms
from .labeling import DEFAULT_SEARCH_BUDGET, distinguishing_index, distinguishing_number
from .transfer import construct_edge_labeling, orbit_choice_survey
from .trees import family_T_membership

FIELDS = (
    "graph6", "n", "m", "aut_order", "D", "D_prime", "is_tree", "in_family_T",
    "orbit_size", "labels_used", "fallback_used", "fallback_reason",
    "verdict_index_bound", "verdict_cyclic_bound", "verdict_certificate",
    "verdict_tree_theorem", "verdict_corollary", "status", "error",
)
VERDICTS = tuple(f for f in FIELDS if f.startswith("verdict_"))


@dataclass
class AnalysisRecord:
    graph6: str
    n: int
    m: int
    status: str = "ok"  # ok | skipped | error
    error: str | None = None
    aut_order: int | None = None
    D: int | None = None
    D_prime: int | None = None
    D_prime_defined: bool = True
    is_tree: bool | None = None
    in_family_T: bool | None = None
    predicted_index: int | None = None
    cyclic: bool | None = None
    orbit_size: int | None = None
    labels_used: int | None = None
    fallback_used: bool | None = None
    fallback_reason: str | None = None
    certificate_verified: bool | None = None
    extras: dict[str, Any] = field(default_factory=dict)

    # verdicts are derived from the numeric fields on every access

    @property
    def verdict_index_bound(self) -> bool | None:
        if self.D is None or self.D_prime is None or self.n < 3:
            return None
        return self.D_prime <= self.D + 1

    @property
    def verdict_cyclic_bound(self) -> bool | None:
        if not self.cyclic or self.D is None or self.D_prime is None:
            return None
        return self.D_prime <= self.D

    @property
    def verdict_certificate(self) -> bool | None:
        if not self.cyclic or self.D is None or self.labels_used is None:
            return None
        return bool(self.certificate_verified) and self.labels_used <= self.D

    @property
    def verdict_tree_theorem(self) -> bool | None:
        if self.predicted_index is None or self.D_prime is None:
            return None
        return self.D_prime == self.predicted_index

    @property
    def verdict_corollary(self) -> bool | None:
        if self.n < 3 or self.D is None or self.D_prime is None or self.is_tree is None:
            return None
        if self.is_tree and self.in_family_T is None:
            return None
        return (self.D_prime == self.D + 1) == bool(self.is_tree and self.in_family_T)

    def failed_verdicts(self) -> list[str]:
        return [v for v in VERDICTS if getattr(self, v) is False]

    @property
    def ok(self) -> bool:
        return self.status != "error" and not self.failed_verdicts()

    def to_dict(self) -> dict[str, Any]:
        out = {}
        for f in FIELDS:
            out[f] = getattr(self, f)
        if not self.D_prime_defined:
            out["D_prime"] = "NotDefined"
        out.update(self.extras)
        return out


def analyze_graph(g: Graph, group_budget: int = DEFAULT_GROUP_BUDGET,
                  search_budget: int = DEFAULT_SEARCH_BUDGET,
                  emit_certificates: bool = False,
                  orbit_survey: bool = False) -> AnalysisRecord:
    """Everything the package knows how to compute about one graph.

    Budget errors are caught and recorded so that batch runs always finish.
    """
    rec = AnalysisRecord(encode_graph6(g), g.n, g.m)
    if not is_connected(g):
        rec.status = "skipped"
        rec.error = "disconnected"
        return rec
    try:
        grp = automorphisms(g, budget=group_budget)
        rec.aut_order = grp.order
        rec.D, phi = distinguishing_number(g, grp, search_budget=search_budget)
        try:
            rec.D_prime, edge_witness = distinguishing_index(g, grp, search_budget=search_budget)
        except NotDefined:
            rec.D_prime_defined = False
            edge_witness = None
        rec.is_tree = is_tree(g)
        rec.cyclic = has_cycle(g)
        if emit_certificates:
            rec.extras["vertex_witness"] = list(phi.labels)
            rec.extras["edge_witness"] = list(edge_witness.labels) if edge_witness else None
        if rec.is_tree and g.n >= 3:
            report = family_T_membership(g, search_budget=search_budget, D=rec.D)
            rec.in_family_T = report.in_family
            rec.predicted_index = report.predicted_index
            if emit_certificates:
                rec.extras["tree_report"] = report.to_dict()
        if rec.cyclic:
            cert = construct_edge_labeling(g, phi, grp, search_budget=search_budget)
            rec.orbit_size = cert.orbit_size
            rec.labels_used = cert.labels_used
            rec.fallback_used = cert.fallback_used
            rec.fallback_reason = cert.fallback_reason
            rec.certificate_verified = cert.verified
            if emit_certificates:
                rec.extras["certificate"] = cert.to_dict()
            if orbit_survey:
                trials = orbit_choice_survey(g, phi, grp, search_budget=search_budget)
                rec.extras["orbit_survey"] = [
                    {
                        "representative": list(t.representative.vertex_seq),
                        "orbit_size": t.orbit_size,
                        "minimal": t.minimal,
                        "step1_feasible": t.step1_feasible,
                        "distinguishing": t.distinguishing,
                    }
                    for t in trials
                ]
    except SymbreakError as exc:
        rec.status = "error"
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec
