"""
Verification suites run by ``verify``. Each suite turns a SystemAnalysis into
a list of checks; randomized suites draw from a seeded numpy generator.
"""
import inspect
import logging
import sys
from itertools import combinations

import numpy as np

from symmetric_systems.analysis.context import SystemAnalysis
from symmetric_systems.analysis.cross_families import (
    alpha_m_bound,
    brute_force_alpha_m,
    check_star_decomposition,
    classify_optimal,
    enumerate_optimal_families,
    random_cross_family,
)
from symmetric_systems.analysis.primitivity import (
    DISCONNECTED_IMPRIMITIVE,
    PRIMITIVE,
    certify_primitivity_by_action,
    check_deficiency_inequality,
    check_fractional_bound,
    check_imprimitive_union,
    check_maximum_set_regularity,
    check_ratio_lemma,
    is_imprimitive_set,
    verify_block_partition,
)
from symmetric_systems.analysis.report import Check, CheckStatus
from symmetric_systems.core.config import DEFAULT_SUITE_FAMILY_CAP, DEFAULT_SUITE_ORACLE_NODE_CAP
from symmetric_systems.core.errors import SearchCapExceeded
from symmetric_systems.core.graph import SystemGraph, VertexSet
from symmetric_systems.core.group import is_automorphism, is_transitive

logger = logging.getLogger(__name__)


def random_independent_set(g: SystemGraph, rng: np.random.Generator) -> VertexSet:
    """A random-order greedy maximal independent set, cut to a random size."""
    chosen, blocked = [], 0
    for v in rng.permutation(g.vertex_count):
        v = int(v)
        if not (blocked >> v) & 1:
            chosen.append(v)
            blocked |= (1 << v) | g.neighbors(v)
    keep = int(rng.integers(0, len(chosen) + 1))
    return g.vertex_set(chosen[:keep])


def random_vertex_set(g: SystemGraph, rng: np.random.Generator) -> VertexSet:
    """A uniformly sized random nonempty vertex set."""
    size = int(rng.integers(1, g.vertex_count + 1))
    return g.vertex_set(int(v) for v in rng.choice(g.vertex_count, size=size, replace=False))


def summarize(name: str, checks) -> Check:
    """Fold many checks into one: the first failure, or a pass with a count."""
    checks = list(checks)
    for c in checks:
        if c.status is CheckStatus.FAIL:
            return Check.failed(name, f"{c.name}: {c.detail}")
    equalities = sum(1 for c in checks if c.detail.startswith("equality"))
    return Check.passed(name, f"{len(checks)} cases, {equalities} with equality")


class Suite:
    name = "uncategorized"
    needs_transitivity = True

    def __init__(self, analysis: SystemAnalysis, samples: int, seed: int):
        self.analysis = analysis
        self.samples = samples
        self.seed = seed

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def run(self) -> list:
        if self.needs_transitivity and not self.analysis.certified_transitive:
            return [Check.skipped(self.name, "no generator set certifying vertex-transitivity")]
        return self.checks()

    def checks(self) -> list:
        raise NotImplementedError


class TransitivitySuite(Suite):
    name = "transitivity"
    needs_transitivity = False

    def checks(self):
        g, G = self.analysis.graph, self.analysis.generators
        if G is None:
            return [Check.skipped(self.name, "no generators supplied")]
        if G.degree != g.vertex_count:
            return [Check.failed(self.name, f"generators of degree {G.degree} on {g.vertex_count} vertices")]
        out = [
            Check.expect(f"automorphism generator {i}", is_automorphism(g, p), f"{len(G)} generators")
            for i, p in enumerate(G)
        ]
        out.append(Check.expect("transitive", is_transitive(G), f"degree {G.degree}"))
        return out


class RatioLemmaSuite(Suite):
    name = "ratio-lemma"

    def checks(self):
        a = self.analysis
        rng = self.rng()
        cases = [VertexSet.empty(a.graph.vertex_count), a.alpha_report.witness]
        cases += [random_independent_set(a.graph, rng) for _ in range(self.samples)]
        results = [check_ratio_lemma(a.graph, A, a.alpha, a.maximum_sets) for A in cases]
        return [summarize(self.name, results)]


class DeficiencySuite(Suite):
    name = "deficiency"

    def checks(self):
        a = self.analysis
        rng = self.rng()
        cases = [VertexSet.empty(a.graph.vertex_count), a.alpha_report.witness]
        cases += [random_independent_set(a.graph, rng) for _ in range(self.samples)]
        return [summarize(self.name, (check_deficiency_inequality(a.graph, A, a.alpha) for A in cases))]


class FractionalSuite(Suite):
    name = "fractional"

    def checks(self):
        a = self.analysis
        g = a.graph
        rng = self.rng()
        pairs = [(g.all_vertices(), a.alpha_report.witness)]
        for _ in range(self.samples):
            S = a.alpha_report.witness if rng.random() < 0.5 else random_independent_set(g, rng)
            pairs.append((random_vertex_set(g, rng), S))
        return [summarize(self.name, (check_fractional_bound(g, B, S) for B, S in pairs))]


class PrimitivitySuite(Suite):
    name = "primitivity"
    needs_transitivity = False

    def checks(self):
        a = self.analysis
        g = a.graph
        verdict = a.verdict
        out = [Check.passed(
            "primitivity-verdict",
            f"{verdict.status}; {len(verdict.witnesses)} witnesses; "
            f"{'exhaustive' if verdict.search_exhaustive else 'search truncated'}",
        )]
        bad = [A for A in verdict.witnesses if not is_imprimitive_set(g, A, a.alpha)]
        out.append(Check.expect(
            "witnesses-imprimitive",
            not bad,
            f"{len(verdict.witnesses)} witnesses checked" if not bad else f"{list(bad[0].members())} fails the ratio",
        ))
        if not a.connected:
            out.append(Check.expect(
                "disconnected-has-witness",
                verdict.status == DISCONNECTED_IMPRIMITIVE and (bool(verdict.witnesses) or not verdict.search_exhaustive),
                f"{len(g.connected_components())} components",
            ))
        if a.generators is not None:
            certificate = certify_primitivity_by_action(g, a.generators, a.alpha)
            out.append(certificate)
            if certificate.status is CheckStatus.PASS:
                out.append(Check.expect(
                    "certificate-agrees",
                    verdict.status == PRIMITIVE or not verdict.search_exhaustive,
                    f"search verdict {verdict.status}",
                ))
        if a.certified_transitive:
            out.append(check_maximum_set_regularity(g, a.alpha, a.enumeration_cap))
        return out


class BlocksSuite(Suite):
    name = "blocks"
    max_union_pairs = 20

    def checks(self):
        a = self.analysis
        verdict = a.verdict
        if not verdict.witnesses:
            return [Check.skipped(self.name, f"no imprimitive set ({verdict.status})")]
        if not verdict.search_exhaustive:
            return [Check.skipped(self.name, "search truncated: largest witnesses are not certified")]
        out = []
        for A in verdict.maximal_witnesses:
            out.extend(verify_block_partition(a.graph, a.generators, A, a.alpha))
        pairs = list(combinations(verdict.witnesses, 2))[: self.max_union_pairs]
        out.extend(check_imprimitive_union(a.graph, A, B, a.alpha) for A, B in pairs)
        return out


class CrossFamiliesSuite(Suite):
    name = "cross-families"
    needs_transitivity = False

    def checks(self):
        a = self.analysis
        g = a.graph
        n, alpha = g.vertex_count, a.alpha
        hypotheses = a.connected and a.certified_transitive
        out = []
        top = -(-n // alpha) + 1  # one past the threshold
        for m in range(1, top + 1):
            report = alpha_m_bound(n, alpha, m)
            name = f"alpha_{m}"
            try:
                value, witness = brute_force_alpha_m(g, m, DEFAULT_SUITE_ORACLE_NODE_CAP)
            except SearchCapExceeded:
                out.append(Check.skipped(name, f"bound {report.bound} ({report.regime}); oracle too large"))
                continue
            detail = f"bound {report.bound} ({report.regime}), oracle {value}"
            if not hypotheses:
                out.append(Check.passed(name, detail + ", agree") if value == report.bound
                           else Check.skipped(name, detail + "; hypotheses fail, no claim"))
                continue
            out.append(Check.expect(name, value == report.bound, detail))
            if value != report.bound:
                continue
            try:
                families = enumerate_optimal_families(g, m, DEFAULT_SUITE_FAMILY_CAP, DEFAULT_SUITE_ORACLE_NODE_CAP)
            except SearchCapExceeded:
                families = [witness]
            tags = {}
            falsified = None
            for F in families:
                r = classify_optimal(g, a.generators, F, alpha)
                tags[r.case_tag] = tags.get(r.case_tag, 0) + 1
                if r.falsified and falsified is None:
                    falsified = F
            summary = ", ".join(f"{tag}: {count}" for tag, count in sorted(tags.items(), key=lambda kv: str(kv[0])))
            out.append(Check.expect(
                f"classify_{m}",
                falsified is None,
                f"{len(families)} optimal families ({summary})" if falsified is None
                else f"{falsified.to_list()} matches no equality case",
            ))

        rng = self.rng()
        stars = [check_star_decomposition(g, random_cross_family(g, int(rng.integers(1, 5)), rng))
                 for _ in range(self.samples)]
        out.append(summarize("star-decomposition", stars))
        return out


SUITE_TYPES = {}


def register_suites():
    if SUITE_TYPES:
        return
    for _, obj in inspect.getmembers(sys.modules[__name__], inspect.isclass):
        if issubclass(obj, Suite) and obj is not Suite:
            SUITE_TYPES[obj.name] = obj


register_suites()

SUITE_ORDER = ("transitivity", "ratio-lemma", "deficiency", "fractional", "primitivity", "blocks", "cross-families")
SUITE_ALIASES = {"theorem-2.5": "cross-families"}


def run_suites(analysis: SystemAnalysis, names, samples: int, seed: int) -> list:
    if "all" in names:
        names = SUITE_ORDER
    checks = []
    for name in dict.fromkeys(SUITE_ALIASES.get(name, name) for name in names):
        logger.info("Running suite %s on %s", name, analysis.subject)
        checks.extend(SUITE_TYPES[name](analysis, samples, seed).run())
    return checks
