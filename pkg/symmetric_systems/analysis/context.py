"""
A system under analysis: the graph, its generators if known, and the derived
facts every suite reuses (alpha, I(G), the primitivity verdict), each computed
once on first use.
"""
import logging
from functools import cached_property
from typing import Optional

from symmetric_systems.analysis.primitivity import PrimitivityVerdict, find_imprimitive_sets
from symmetric_systems.core.config import DEFAULT_ENUMERATION_CAP, DEFAULT_WITNESS_REPORT
from symmetric_systems.core.graph import SystemGraph
from symmetric_systems.core.group import GeneratorSet, is_automorphism, is_transitive
from symmetric_systems.core.solver import AlphaReport, MaxSetFamily, independence_number, maximum_independent_sets

logger = logging.getLogger(__name__)


class SystemAnalysis:
    def __init__(
        self,
        graph: SystemGraph,
        generators: Optional[GeneratorSet] = None,
        subject: Optional[str] = None,
        enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
        witness_report: int = DEFAULT_WITNESS_REPORT,
    ):
        self.graph = graph
        self.generators = generators
        self.enumeration_cap = enumeration_cap
        self.witness_report = witness_report
        meta = graph.meta or {}
        self.subject = subject or meta.get("descriptor") or f"graph(n={graph.vertex_count}, edges={graph.edge_count})"

    @classmethod
    def from_built(cls, built, **kwargs) -> "SystemAnalysis":
        return cls(built.graph, built.generators, subject=str(built.descriptor), **kwargs)

    @cached_property
    def alpha_report(self) -> AlphaReport:
        logger.info("Computing independence number of %s", self.subject)
        return independence_number(self.graph)

    @property
    def alpha(self) -> int:
        return self.alpha_report.alpha

    @cached_property
    def maximum_sets(self) -> MaxSetFamily:
        return maximum_independent_sets(self.graph, self.enumeration_cap)

    @cached_property
    def connected(self) -> bool:
        return self.graph.is_connected()

    @cached_property
    def certified_transitive(self) -> bool:
        """True when the generators are automorphisms acting transitively."""
        G = self.generators
        if G is None or G.degree != self.graph.vertex_count:
            return False
        return is_transitive(G) and all(is_automorphism(self.graph, p) for p in G)

    @cached_property
    def verdict(self) -> PrimitivityVerdict:
        logger.info("Searching imprimitive independent sets of %s", self.subject)
        generators = self.generators if self.certified_transitive else None
        return find_imprimitive_sets(self.graph, self.alpha, self.witness_report, generators=generators)
