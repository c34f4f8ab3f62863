"""
Cross families: m vertex sets such that no vertex of one part is adjacent to
a vertex of a different part. Parts may overlap and need not be independent.

alpha_m is the largest total size sum(|A_i|) of a cross family with m parts.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from symmetric_systems.analysis.primitivity import is_imprimitive_set
from symmetric_systems.analysis.report import Check
from symmetric_systems.core.config import DEFAULT_ENUMERATION_CAP, DEFAULT_ORACLE_NODE_CAP
from symmetric_systems.core.errors import PreconditionError, SearchCapExceeded
from symmetric_systems.core.graph import SystemGraph, VertexSet, iter_bits
from symmetric_systems.core.group import GeneratorSet, is_automorphism, is_transitive
from symmetric_systems.core.solver import clique_cover_bound, independence_number, is_independent

logger = logging.getLogger(__name__)

BELOW, AT, ABOVE = "below", "at", "above"

CASE_FULL = "i"
CASE_COMMON_MAXIMUM = "ii"
CASE_THRESHOLD_TRIVIAL = "iii-trivial"
CASE_THRESHOLD_IMPRIMITIVE = "iii-imprimitive"


@dataclass(frozen=True)
class CrossFamily:
    m: int
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if self.m < 1 or len(parts) != self.m:
            raise PreconditionError(f"a family with m={self.m} needs exactly m parts, got {len(parts)}")
        if len({A.universe for A in parts}) > 1:
            raise PreconditionError("family parts live over different vertex sets")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[VertexSet]) -> "CrossFamily":
        return cls(len(parts), tuple(parts))

    @property
    def total(self) -> int:
        return sum(len(A) for A in self.parts)

    def with_nonempty_first(self) -> "CrossFamily":
        """Stable reordering that puts the first nonempty part in front."""
        for i, A in enumerate(self.parts):
            if A:
                return CrossFamily(self.m, (A,) + self.parts[:i] + self.parts[i + 1:])
        return self

    def to_list(self) -> list:
        return [list(A.members()) for A in self.parts]


@dataclass(frozen=True)
class StarDecomposition:
    stars: tuple       # A_i*: members of A_i adjacent to nothing in A_i
    primes: tuple      # A_i' = A_i - A_i*
    star_union: VertexSet
    prime_union: VertexSet


@dataclass(frozen=True)
class RegimeReport:
    m: int
    regime: str
    bound: int
    case_tag: Optional[str] = None
    falsified: bool = False
    warnings: tuple = ()
    notes: tuple = ()

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "regime": self.regime,
            "bound": self.bound,
            "case": self.case_tag,
            "falsified": self.falsified,
            "warnings": list(self.warnings),
            "notes": list(self.notes),
        }


def is_cross_family(g: SystemGraph, F) -> bool:
    parts = F.parts if isinstance(F, CrossFamily) else tuple(F)
    for A in parts:
        g.check_set(A)
    for i, A in enumerate(parts):
        reach = g.neighborhood_mask(A.mask)
        for j, B in enumerate(parts):
            if i != j and reach & B.mask:
                return False
    return True


def alpha_m_bound(vertex_count: int, alpha: int, m: int) -> RegimeReport:
    """max(|X|, m·alpha), with the regime decided by comparing m·alpha to |X|."""
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    if alpha < 1:
        raise PreconditionError(f"alpha must be at least 1, got {alpha}")
    product = m * alpha
    regime = BELOW if product < vertex_count else AT if product == vertex_count else ABOVE
    return RegimeReport(m, regime, max(vertex_count, product))


# --- the normal-form oracle ----------------------------------------------------
#
# In an optimal family every vertex lies in no part, in exactly one part, or in
# all m parts. A vertex in two or more parts can have no member of any part as
# a neighbour, so moving it into every part keeps the family valid and does not
# shrink it. The check against the unreduced search below exercises this.
#
# Vertex states: `full` marks vertices in every part, `labels[i]` the vertices
# only in part i. Along an edge either end is empty or both carry the same
# single label. Labels are introduced in order (a new label is the smallest
# unused one), so each family is met once up to renaming the parts.


def _family_from_state(n: int, m: int, full: int, labels: tuple) -> CrossFamily:
    return CrossFamily(m, tuple(VertexSet(n, full | labels[i]) for i in range(m)))


def _capabilities(r: int, full: int, labels: tuple):
    """(hit labels, may be nonempty, may be full) for a vertex with adjacency row ``r``."""
    if r & full:
        return (), False, False
    hits = tuple(i for i, L in enumerate(labels) if r & L)
    return hits, len(hits) <= 1, not hits


def _normal_form_search(g: SystemGraph, m: int, node_cap: int, collect: bool, cap: int):
    n = g.vertex_count
    rows = g.rows
    full_set = (1 << n) - 1

    # incumbents: everything in part 1, or a maximum independent set in every part
    best = n
    best_state = (0, (full_set,) + (0,) * (m - 1))
    if m >= 2:
        witness = independence_number(g).witness
        if m * len(witness) > best:
            best = m * len(witness)
            best_state = (witness.mask, (0,) * m)

    found = []
    truncated = False
    nodes = 0
    stack = [(0, 0, (0,) * m, 0, 0)]  # (next vertex, full, labels, labels used, value)
    while stack:
        v, full, labels, used, value = stack.pop()
        nodes += 1
        if nodes > node_cap:
            raise SearchCapExceeded(f"cross-family search exceeded {node_cap} nodes")
        if v == n:
            if value > best:
                best, best_state = value, (full, labels)
                found = []
            if collect and value == best:
                if len(found) == cap:
                    truncated = True
                    continue
                found.append((full, labels))
            continue

        open_mask = full_set >> v << v
        may_fill = 0
        may_join = 0
        for u in iter_bits(open_mask):
            _, join, fill = _capabilities(rows[u], full, labels)
            if join:
                may_join += 1
            if fill:
                may_fill |= 1 << u
        bound = value + may_join
        if m >= 2:
            bound += (m - 1) * clique_cover_bound(rows, may_fill)
        if bound < best or (bound == best and not collect):
            continue

        hits, join, fill = _capabilities(rows[v], full, labels)
        bit = 1 << v
        children = []
        if m >= 2 and fill:
            children.append((v + 1, full | bit, labels, used, value + m))
        if join:
            options = hits if hits else range(min(used + 1, m))
            for i in options:
                new_labels = labels[:i] + (labels[i] | bit,) + labels[i + 1:]
                children.append((v + 1, full, new_labels, max(used, i + 1), value + 1))
        children.append((v + 1, full, labels, used, value))
        stack.extend(reversed(children))

    logger.debug("cross-family search: m=%d value %d after %d nodes", m, best, nodes)
    return best, best_state, found, truncated


def brute_force_alpha_m(
    g: SystemGraph,
    m: int,
    node_cap: int = DEFAULT_ORACLE_NODE_CAP,
) -> Tuple[int, CrossFamily]:
    """Exact alpha_m by search over normal-form families, with one optimal witness."""
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    best, (full, labels), _, _ = _normal_form_search(g, m, node_cap, collect=False, cap=0)
    return best, _family_from_state(g.vertex_count, m, full, labels)


def enumerate_optimal_families(
    g: SystemGraph,
    m: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
    node_cap: int = DEFAULT_ORACLE_NODE_CAP,
) -> List[CrossFamily]:
    """Every optimal family in normal form, one per renaming of the parts."""
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    if cap < 1:
        raise PreconditionError(f"enumeration cap must be at least 1, got {cap}")
    _, _, found, truncated = _normal_form_search(g, m, node_cap, collect=True, cap=cap)
    if truncated:
        logger.warning("optimal family enumeration truncated at %d families", cap)
    return [_family_from_state(g.vertex_count, m, full, labels) for full, labels in found]


def _clash(s: int, t: int) -> bool:
    """Membership masks s and t put some i and some j != i on the two ends of an edge."""
    return any((s >> i) & 1 and (t >> j) & 1 for i in range(s.bit_length()) for j in range(t.bit_length()) if i != j)


def unreduced_alpha_m(
    g: SystemGraph,
    m: int,
    node_cap: int = DEFAULT_ORACLE_NODE_CAP,
) -> Tuple[int, CrossFamily]:
    """alpha_m over all 2^m memberships per vertex, straight from the definition.

    Only meant for very small graphs: it is the reference the normal-form
    search is checked against.
    """
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    n = g.vertex_count
    rows = g.rows
    memberships = sorted(range(1 << m), key=lambda s: (s.bit_count(), s))

    best, best_states = -1, None
    nodes = 0
    stack = [((), 0)]  # (memberships of vertices 0..v-1, value)
    while stack:
        states, value = stack.pop()
        nodes += 1
        if nodes > node_cap:
            raise SearchCapExceeded(f"unreduced cross-family search exceeded {node_cap} nodes")
        v = len(states)
        if v == n:
            if value > best:
                best, best_states = value, states
            continue
        if value + m * (n - v) <= best:
            continue
        earlier = [states[w] for w in iter_bits(rows[v] & ((1 << v) - 1))]
        for s in memberships:
            if not any(_clash(s, t) or _clash(t, s) for t in earlier):
                stack.append((states + (s,), value + s.bit_count()))

    parts = tuple(
        VertexSet.of(n, (v for v in range(n) if (best_states[v] >> i) & 1)) for i in range(m)
    )
    return best, CrossFamily(m, parts)


def random_cross_family(g: SystemGraph, m: int, rng: np.random.Generator) -> CrossFamily:
    """A random cross family, built vertex by vertex in random order."""
    if m < 1:
        raise PreconditionError(f"m must be at least 1, got {m}")
    n = g.vertex_count
    states = [0] * n
    for v in rng.permutation(n):
        v = int(v)
        neighbours = [states[u] for u in iter_bits(g.rows[v]) if states[u]]
        if not neighbours:
            states[v] = int(rng.integers(0, 1 << m))
            continue
        first = neighbours[0]
        if first.bit_count() == 1 and all(s == first for s in neighbours):
            states[v] = first if rng.random() < 0.5 else 0
    parts = tuple(VertexSet.of(n, (v for v in range(n) if (states[v] >> i) & 1)) for i in range(m))
    return CrossFamily(m, parts)


def star_decomposition(g: SystemGraph, F: CrossFamily) -> StarDecomposition:
    if not is_cross_family(g, F):
        raise PreconditionError("star decomposition needs a cross family")
    n = g.vertex_count
    stars, primes = [], []
    for A in F.parts:
        star = 0
        for a in A:
            if not g.neighbors(a) & A.mask:
                star |= 1 << a
        stars.append(VertexSet(n, star))
        primes.append(VertexSet(n, A.mask & ~star))
    star_union, prime_union = VertexSet.empty(n), VertexSet.empty(n)
    for star, prime in zip(stars, primes):
        star_union = star_union | star
        prime_union = prime_union | prime
    return StarDecomposition(tuple(stars), tuple(primes), star_union, prime_union)


def check_star_decomposition(g: SystemGraph, F: CrossFamily) -> Check:
    """The union of stars is independent, primes are disjoint and avoid N[stars]."""
    d = star_decomposition(g, F)
    name = f"star-decomposition m={F.m} total={F.total}"
    if not is_independent(g, d.star_union):
        return Check.failed(name, f"star union {list(d.star_union.members())} is not independent")
    for i, P in enumerate(d.primes):
        for Q in d.primes[i + 1:]:
            if not P.isdisjoint(Q):
                return Check.failed(name, f"primes overlap in {list((P & Q).members())}")
    if not d.prime_union.issubset(g.outside_neighborhood(d.star_union)):
        return Check.failed(name, "primes meet the closed neighbourhood of the stars")
    return Check.passed(name, f"|A*| = {len(d.star_union)}, |A'| = {len(d.prime_union)}")


def _hypothesis_warnings(g: SystemGraph, G: Optional[GeneratorSet]) -> list:
    warnings = []
    if not g.is_connected():
        warnings.append("graph is disconnected: the equality cases assume a connected system")
    if G is None or G.degree != g.vertex_count:
        warnings.append("no generator set: vertex-transitivity is not certified")
    elif not (is_transitive(G) and all(is_automorphism(g, p) for p in G)):
        warnings.append("generators do not certify vertex-transitivity")
    return warnings


def _review_notes(g: SystemGraph, m: int) -> list:
    meta = g.meta or {}
    params = meta.get("params", {})
    if meta.get("kind") == "subsets" and params.get("t") == 1 and m == 2 and params.get("n") == 2 * params.get("k", 0):
        return ["two families of k-subsets of [2k]: the classical sum bound for this case excludes "
                "it; compare the equality cases by hand"]
    return []


def classify_optimal(
    g: SystemGraph,
    G: Optional[GeneratorSet],
    F: CrossFamily,
    alpha: int,
) -> RegimeReport:
    """Match an optimal family against the equality cases of the alpha_m bound."""
    if not is_cross_family(g, F):
        raise PreconditionError("classification needs a cross family")
    report = alpha_m_bound(g.vertex_count, alpha, F.m)
    if F.total != report.bound:
        raise PreconditionError(f"family of total size {F.total} does not attain the bound {report.bound}")
    warnings = _hypothesis_warnings(g, G)
    notes = _review_notes(g, F.m)

    F = F.with_nonempty_first()
    everything = g.all_vertices()
    first, rest = F.parts[0], F.parts[1:]
    full_form = first == everything and not any(rest)
    common_form = all(A == first for A in rest) and len(first) == alpha and is_independent(g, first)

    tag = None
    if report.regime == BELOW and full_form:
        tag = CASE_FULL
    elif report.regime == ABOVE and common_form:
        tag = CASE_COMMON_MAXIMUM
    elif report.regime == AT:
        if full_form or common_form:
            tag = CASE_THRESHOLD_TRIVIAL
        else:
            d = star_decomposition(g, F)
            A = d.star_union
            if (
                all(star == A for star in d.stars)
                and is_imprimitive_set(g, A, alpha)
                and is_cross_family(g, d.primes)
                and sum(len(P) for P in d.primes) == len(d.prime_union)
                and d.prime_union == g.outside_neighborhood(A)
            ):
                tag = CASE_THRESHOLD_IMPRIMITIVE

    falsified = tag is None and not warnings
    if falsified:
        logger.error("optimal family %s matches no equality case", F.to_list())
    elif tag is None:
        warnings.append("family matches no equality case; hypotheses do not hold, so nothing is claimed")
    return replace(report, case_tag=tag, falsified=falsified, warnings=tuple(warnings), notes=tuple(notes))
