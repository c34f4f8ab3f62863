"""
Imprimitive independent sets and the inequalities around them.

An independent set A is imprimitive when 0 < |A| < alpha and
|A| / |N[A]| = alpha / |V|. Every ratio here is compared by integer
cross-multiplication.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from symmetric_systems.analysis.report import Check
from symmetric_systems.core.config import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_IMPRIMITIVE_NODE_CAP,
    DEFAULT_WITNESS_REPORT,
)
from symmetric_systems.core.errors import PreconditionError
from symmetric_systems.core.graph import SystemGraph, VertexSet, iter_bits
from symmetric_systems.core.group import (
    GeneratorSet,
    blocks_containing,
    is_automorphism,
    is_primitive_action,
    is_transitive,
    set_orbit,
)
from symmetric_systems.core.solver import (
    MaxSetFamily,
    clique_cover_bound,
    independence_number,
    is_independent,
    local_alpha,
    maximum_independent_sets,
)

logger = logging.getLogger(__name__)

PRIMITIVE = "primitive"
IMPRIMITIVE = "imprimitive"
DISCONNECTED_IMPRIMITIVE = "disconnected-imprimitive"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class PrimitivityVerdict:
    status: str
    witnesses: tuple  # largest first, lexicographic within a size
    search_exhaustive: bool
    node_count: int = 0

    @property
    def maximal_witnesses(self) -> tuple:
        if not self.witnesses:
            return ()
        top = len(self.witnesses[0])
        return tuple(A for A in self.witnesses if len(A) == top)


def is_imprimitive_set(g: SystemGraph, A: VertexSet, alpha: int) -> bool:
    if not is_independent(g, A) or not 0 < len(A) < alpha:
        return False
    return len(A) * g.vertex_count == alpha * len(g.closed_neighborhood(A))


def _require_independent(g: SystemGraph, A: VertexSet):
    if not is_independent(g, A):
        raise PreconditionError(f"{A} is not an independent set")


def _anchor_allowed(g: SystemGraph, generators: Optional[GeneratorSet]) -> bool:
    if generators is None or generators.degree != g.vertex_count:
        return False
    if not all(is_automorphism(g, p) for p in generators):
        logger.warning("Supplied generators are not automorphisms; searching unanchored")
        return False
    return is_transitive(generators)


def find_imprimitive_sets(
    g: SystemGraph,
    alpha: int,
    max_report: int = DEFAULT_WITNESS_REPORT,
    generators: Optional[GeneratorSet] = None,
    node_cap: int = DEFAULT_IMPRIMITIVE_NODE_CAP,
) -> PrimitivityVerdict:
    """Depth-first search for imprimitive independent sets.

    Sets are grown by adding vertices above the current maximum, so each set
    is visited once and in lexicographic order. A branch is cut when even the
    largest extension the clique cover allows could not reach the ratio.
    With a transitive group of automorphisms the search only explores sets
    containing vertex 0: every imprimitive set has an image there.
    """
    actual = independence_number(g).alpha
    if alpha != actual:
        raise PreconditionError(f"alpha {alpha} is inconsistent with the graph (independence number {actual})")
    n = g.vertex_count
    rows = g.rows
    disconnected = not g.is_connected()

    by_size = {}
    nodes = 0
    exhaustive = True
    if alpha >= 2:
        full = (1 << n) - 1
        if _anchor_allowed(g, generators):
            stack = [(1, 1, rows[0] | 1, full & ~(rows[0] | 1))]
        else:
            stack = [(1 << v, 1, rows[v] | (1 << v), (full >> (v + 1) << (v + 1)) & ~rows[v]) for v in reversed(range(n))]
        while stack:
            nodes += 1
            if nodes > node_cap:
                exhaustive = False
                logger.warning("imprimitive-set search stopped after %d nodes", node_cap)
                break
            chosen, size, closed, cand = stack.pop()
            if size < alpha and size * n == alpha * closed.bit_count():
                found = by_size.setdefault(size, [])
                if len(found) < max_report:
                    found.append(chosen)
            # best case: every further vertex adds only itself to N[A]
            top = min(alpha - 1, size + clique_cover_bound(rows, cand))
            if top <= size or top * n < alpha * (closed.bit_count() + top - size):
                continue
            children = []
            for v in iter_bits(cand):
                bit = 1 << v
                higher = cand >> (v + 1) << (v + 1)
                children.append((chosen | bit, size + 1, closed | bit | rows[v], higher & ~rows[v]))
            stack.extend(reversed(children))

    witnesses = []
    for size in sorted(by_size, reverse=True):
        witnesses.extend(VertexSet(n, mask) for mask in by_size[size])
    witnesses = tuple(witnesses[:max_report])

    if disconnected:
        status = DISCONNECTED_IMPRIMITIVE
    elif witnesses:
        status = IMPRIMITIVE
    elif exhaustive:
        status = PRIMITIVE
    else:
        status = UNKNOWN
    logger.info("primitivity: %s after %d search nodes (%d witnesses)", status, nodes, len(witnesses))
    return PrimitivityVerdict(status, witnesses, exhaustive, nodes)


def check_ratio_lemma(
    g: SystemGraph,
    A: VertexSet,
    alpha: int,
    max_sets: Optional[MaxSetFamily] = None,
) -> Check:
    """|A|·|V| <= alpha·|N[A]|, with the consequences of equality."""
    _require_independent(g, A)
    n = g.vertex_count
    closed = g.closed_neighborhood(A)
    lhs, rhs = len(A) * n, alpha * len(closed)
    name = f"ratio-lemma {list(A.members())}"
    if lhs > rhs:
        return Check.failed(name, f"|A|·|V| = {lhs} > alpha·|N[A]| = {rhs}")
    if lhs < rhs:
        return Check.passed(name, f"strict: {lhs} < {rhs}")

    if max_sets is None:
        max_sets = maximum_independent_sets(g, DEFAULT_ENUMERATION_CAP)
    for S in max_sets:
        if len(S & closed) != len(A):
            return Check.failed(name, f"maximum set {list(S.members())} meets N[A] in {len(S & closed)} vertices, not {len(A)}")
    outside = closed.complement()
    if outside:
        local = local_alpha(g, outside).alpha
        if local * n != alpha * len(outside):
            return Check.failed(name, f"alpha(outside)·|V| = {local * n} != alpha·|outside| = {alpha * len(outside)}")
    scope = f"first {len(max_sets)} maximum sets" if max_sets.truncated else f"all {len(max_sets)} maximum sets"
    return Check.passed(name, f"equality {lhs} = {rhs}; consequences verified on {scope}")


def check_deficiency_inequality(g: SystemGraph, A: VertexSet, alpha: int) -> Check:
    """|A|·|V| + alpha·|outside N[A]| <= alpha·|V|, equality only for empty, maximum or imprimitive A."""
    _require_independent(g, A)
    n = g.vertex_count
    outside = len(g.outside_neighborhood(A))
    lhs, rhs = len(A) * n + alpha * outside, alpha * n
    name = f"deficiency {list(A.members())}"
    if lhs > rhs:
        return Check.failed(name, f"{lhs} > {rhs}")
    if len(A) == alpha and lhs != rhs:
        return Check.failed(name, f"maximum set without equality: {lhs} < {rhs}")
    if lhs < rhs:
        if is_imprimitive_set(g, A, alpha):
            return Check.failed(name, "imprimitive set without equality")
        return Check.passed(name, f"strict: {lhs} < {rhs}")
    if not A:
        case = "empty"
    elif len(A) == alpha:
        case = "maximum"
    elif is_imprimitive_set(g, A, alpha):
        case = "imprimitive"
    else:
        return Check.failed(name, f"equality {lhs} = {rhs} outside the three equality cases")
    return Check.passed(name, f"equality ({case})")


def check_fractional_bound(g: SystemGraph, B: VertexSet, S: VertexSet) -> Check:
    """|S|·|B| <= alpha(G[B])·|V|; on equality S meets B in alpha(G[B]) vertices."""
    _require_independent(g, S)
    g.check_set(B)
    if not B:
        raise PreconditionError("the fractional bound needs a nonempty B")
    local = local_alpha(g, B).alpha
    lhs, rhs = len(S) * len(B), local * g.vertex_count
    name = f"fractional |S|={len(S)} |B|={len(B)}"
    if lhs > rhs:
        return Check.failed(name, f"|S|·|B| = {lhs} > alpha(B)·|V| = {rhs}")
    if lhs == rhs and len(S & B) != local:
        return Check.failed(name, f"equality but |S ∩ B| = {len(S & B)} != alpha(B) = {local}")
    return Check.passed(name, "equality" if lhs == rhs else f"strict: {lhs} < {rhs}")


def verify_block_partition(g: SystemGraph, G: GeneratorSet, A: VertexSet, alpha: int) -> List[Check]:
    """Check that D = V - N[A] has the global density and that its images partition V."""
    if not is_imprimitive_set(g, A, alpha):
        raise PreconditionError(f"{A} is not an imprimitive independent set")
    n = g.vertex_count
    D = g.outside_neighborhood(A)
    label = list(A.members())
    checks = []

    local = local_alpha(g, D).alpha
    checks.append(Check.expect(
        f"block-density {label}",
        local * n == alpha * len(D),
        f"alpha(D)·|V| = {local * n}, alpha·|D| = {alpha * len(D)}, |D| = {len(D)}",
    ))

    images = set_orbit(G, D)
    overlapping = [E for E in images if E != D and not E.isdisjoint(D)]
    covered = VertexSet.empty(n)
    for E in images:
        covered = covered | E
    disjoint = not overlapping and all(
        E == F or E.isdisjoint(F) for i, E in enumerate(images) for F in images[i + 1:]
    )
    checks.append(Check.expect(
        f"block-partition {label}",
        disjoint and covered == g.all_vertices(),
        f"{len(images)} images of D; " + ("disjoint" if disjoint else "overlapping")
        + (", covering V" if covered == g.all_vertices() else ", not covering V"),
    ))
    checks.append(Check.expect(
        f"block-size {label}",
        n % len(D) == 0,
        f"|D| = {len(D)} {'divides' if n % len(D) == 0 else 'does not divide'} |V| = {n}",
    ))
    return checks


def certify_primitivity_by_action(g: SystemGraph, G: GeneratorSet, alpha: int) -> Check:
    """Primitivity from the group side.

    If the system were imprimitive, V - N[A] for a largest imprimitive A would
    be a block of the action with the global density. So a primitive action,
    or blocks all strictly denser than alpha/|V|, rule imprimitivity out.
    """
    name = "action-certificate"
    n = g.vertex_count
    if G.degree != n or not is_transitive(G):
        return Check.skipped(name, "no transitive generator set")
    if not all(is_automorphism(g, p) for p in G):
        return Check.skipped(name, "generators are not automorphisms")
    if n < 2:
        return Check.skipped(name, "a single vertex has no proper blocks")
    # singleton blocks carry density exactly alpha/|V| only when the graph is edgeless
    if alpha == n:
        return Check.skipped(name, "edgeless graph: singletons have the global density")
    if is_primitive_action(G).primitive:
        return Check.passed(name, "the action is primitive")
    for D in blocks_containing(G, 0):
        local = local_alpha(g, D).alpha
        if local * n <= alpha * len(D):
            return Check.skipped(name, f"inconclusive: block {list(D.members())} has alpha(D)·|V| = alpha·|D|")
    return Check.passed(name, "every block is denser than alpha/|V|")


def check_imprimitive_union(g: SystemGraph, A: VertexSet, B: VertexSet, alpha: int) -> Check:
    """C = A ∪ (B - N[A]) is independent with N[C] = N[A] ∪ N[B] and the global ratio."""
    for X in (A, B):
        if not is_imprimitive_set(g, X, alpha):
            raise PreconditionError(f"{X} is not an imprimitive independent set")
    closed_a = g.closed_neighborhood(A)
    C = A | (B - closed_a)
    name = f"imprimitive-union {list(A.members())} {list(B.members())}"
    if not is_independent(g, C):
        return Check.failed(name, f"{list(C.members())} is not independent")
    closed_c = g.closed_neighborhood(C)
    if closed_c != closed_a | g.closed_neighborhood(B):
        return Check.failed(name, "N[C] differs from N[A] ∪ N[B]")
    return Check.expect(
        name,
        len(C) * g.vertex_count == alpha * len(closed_c),
        f"|C| = {len(C)}, |N[C]| = {len(closed_c)}",
    )


def check_maximum_set_regularity(g: SystemGraph, alpha: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Check:
    """Every vertex lies in the same number r of maximum sets, and r·|V| = alpha·|I(G)|."""
    name = "maximum-set-regularity"
    family = maximum_independent_sets(g, cap)
    if family.truncated:
        return Check.skipped(name, f"enumeration truncated at {len(family)} sets")
    counts = [0] * g.vertex_count
    for S in family:
        for v in S:
            counts[v] += 1
    if len(set(counts)) != 1:
        return Check.failed(name, f"vertices lie in between {min(counts)} and {max(counts)} maximum sets")
    r = counts[0]
    return Check.expect(
        name,
        r * g.vertex_count == alpha * len(family),
        f"r = {r}, |I(G)| = {len(family)}",
    )
