"""
Exact maximum independent set search.

Branch and bound on bitsets: branch on a maximum-degree candidate (include
first, then exclude), prune with a greedy clique-cover bound. Ties are broken
by the lowest vertex index so every run returns the same witness.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from symmetric_systems.core.config import DEFAULT_ENUMERATION_CAP
from symmetric_systems.core.errors import PreconditionError
from symmetric_systems.core.graph import SystemGraph, VertexSet, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphaReport:
    alpha: int
    witness: VertexSet
    node_count: int


@dataclass(frozen=True)
class MaxSetFamily:
    sets: tuple
    truncated: bool

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def clique_cover_bound(rows, cand: int) -> int:
    """Number of cliques in a greedy cover of ``cand``.

    An independent set meets each clique at most once, so this bounds the
    independence number of the induced subgraph from above.
    """
    bound = 0
    remaining = cand
    while remaining:
        low = remaining & -remaining
        remaining ^= low
        clique_cands = remaining & rows[low.bit_length() - 1]
        while clique_cands:
            pick = clique_cands & -clique_cands
            remaining ^= pick
            clique_cands &= rows[pick.bit_length() - 1]
        bound += 1
    return bound


def greedy_independent_mask(rows, cand: int) -> int:
    """Lowest-index-first maximal independent subset of ``cand``."""
    chosen = 0
    while cand:
        low = cand & -cand
        chosen |= low
        cand &= ~(low | rows[low.bit_length() - 1])
    return chosen


def _branch_vertex(rows, cand: int):
    best_v, best_deg = -1, -1
    for v in iter_bits(cand):
        deg = (rows[v] & cand).bit_count()
        if deg > best_deg:
            best_v, best_deg = v, deg
    return best_v, best_deg


def is_independent(g: SystemGraph, A: VertexSet) -> bool:
    g.check_set(A)
    return g.neighborhood_mask(A.mask) & A.mask == 0


def _max_independent_mask(rows, cand: int):
    """Return (best_mask, node_count) for the subgraph induced on ``cand``."""
    best = greedy_independent_mask(rows, cand)
    best_size = best.bit_count()
    nodes = 0
    stack = [(0, 0, cand)]
    while stack:
        chosen, size, cand = stack.pop()
        nodes += 1
        if size + cand.bit_count() <= best_size:
            continue
        if size + clique_cover_bound(rows, cand) <= best_size:
            continue
        v, deg = _branch_vertex(rows, cand)
        if deg <= 0:
            # every remaining candidate is isolated: take them all
            best, best_size = chosen | cand, size + cand.bit_count()
            continue
        bit = 1 << v
        stack.append((chosen, size, cand & ~bit))
        stack.append((chosen | bit, size + 1, cand & ~bit & ~rows[v]))
    return best, nodes


def independence_number(g: SystemGraph) -> AlphaReport:
    """Exact alpha with one deterministic witness."""
    full = (1 << g.vertex_count) - 1
    best, nodes = _max_independent_mask(g.rows, full)
    logger.debug("independence number %d after %d search nodes", best.bit_count(), nodes)
    return AlphaReport(best.bit_count(), VertexSet(g.vertex_count, best), nodes)


def maximum_independent_sets(g: SystemGraph, cap: int = DEFAULT_ENUMERATION_CAP) -> MaxSetFamily:
    """All maximum independent sets I(G), or the first ``cap`` of them.

    Truncation is reported on the result, never silent.
    """
    if cap < 1:
        raise PreconditionError(f"enumeration cap must be at least 1, got {cap}")
    rows = g.rows
    alpha = independence_number(g).alpha
    found = []
    truncated = False
    stack = [(0, 0, (1 << g.vertex_count) - 1)]
    while stack:
        chosen, size, cand = stack.pop()
        if size + cand.bit_count() < alpha:
            continue
        if size + clique_cover_bound(rows, cand) < alpha:
            continue
        v, deg = _branch_vertex(rows, cand)
        if deg <= 0:
            # cand is independent here and size + |cand| >= alpha forces equality
            if len(found) == cap:
                truncated = True
                break
            found.append(chosen | cand)
            continue
        bit = 1 << v
        stack.append((chosen, size, cand & ~bit))
        stack.append((chosen | bit, size + 1, cand & ~bit & ~rows[v]))
    if truncated:
        logger.warning("maximum independent set enumeration truncated at %d sets", cap)
    sets = sorted((VertexSet(g.vertex_count, mask) for mask in found), key=VertexSet.sort_key)
    return MaxSetFamily(tuple(sets), truncated)


def local_alpha(g: SystemGraph, B: VertexSet) -> AlphaReport:
    """alpha(G[B]) with the witness in the original vertex indices."""
    g.check_set(B)
    if not B:
        raise PreconditionError("local alpha of an empty vertex set")
    best, nodes = _max_independent_mask(g.rows, B.mask)
    return AlphaReport(best.bit_count(), VertexSet(g.vertex_count, best), nodes)
