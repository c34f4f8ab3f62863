"""
Graph representation of a system (X, p).

Vertices are dense indices 0..n-1. A pair {u, v} is an edge exactly when it is
*not* compatible, so the compatible subsets are the independent sets. Adjacency
is stored as one integer bitset row per vertex.
"""
from __future__ import annotations

import logging
from typing import Callable, Iterable, Iterator, Optional, Sequence

import networkx as nx
import numpy as np

from symmetric_systems.core.config import vertex_cap
from symmetric_systems.core.errors import (
    ConstructionError,
    InvalidVertexSet,
    PreconditionError,
    VertexCapExceeded,
)

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """An immutable subset of ``range(universe)`` with bitset semantics."""

    __slots__ = ("_universe", "_mask")

    def __init__(self, universe: int, mask: int = 0):
        if universe < 0:
            raise InvalidVertexSet(f"universe must be non-negative, got {universe}")
        if mask < 0 or mask >> universe:
            raise InvalidVertexSet(f"mask has members outside range({universe})")
        self._universe = universe
        self._mask = mask

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < universe:
                raise InvalidVertexSet(f"vertex {v} out of range for {universe} vertices")
            mask |= 1 << v
        return cls(universe, mask)

    @classmethod
    def empty(cls, universe: int) -> "VertexSet":
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(universe, (1 << universe) - 1)

    @property
    def universe(self) -> int:
        return self._universe

    @property
    def mask(self) -> int:
        return self._mask

    def members(self) -> tuple:
        return tuple(iter_bits(self._mask))

    def __iter__(self):
        return iter_bits(self._mask)

    def __len__(self):
        return self._mask.bit_count()

    def __bool__(self):
        return self._mask != 0

    def __contains__(self, v):
        return isinstance(v, int) and 0 <= v < self._universe and (self._mask >> v) & 1 == 1

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._universe == other._universe and self._mask == other._mask

    def __hash__(self):
        return hash((self._universe, self._mask))

    def __repr__(self):
        return f"VertexSet({list(self.members())})"

    def sort_key(self) -> tuple:
        return self.members()

    def _check(self, other: "VertexSet"):
        if self._universe != other._universe:
            raise InvalidVertexSet(
                f"vertex sets over different universes ({self._universe} vs {other._universe})"
            )

    def __or__(self, other):
        self._check(other)
        return VertexSet(self._universe, self._mask | other._mask)

    def __and__(self, other):
        self._check(other)
        return VertexSet(self._universe, self._mask & other._mask)

    def __sub__(self, other):
        self._check(other)
        return VertexSet(self._universe, self._mask & ~other._mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self._universe, ((1 << self._universe) - 1) & ~self._mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self._mask & ~other._mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self._mask & other._mask == 0


class SystemGraph:
    """Immutable simple graph G(X, p) of a system.

    ``origin`` maps vertices of an induced subgraph back to the indices of the
    graph it was cut from; it is ``None`` for graphs built directly.
    """

    __slots__ = ("_rows", "_labels", "_meta", "_origin", "_parent_count")

    def __init__(
        self,
        rows: Sequence[int],
        labels: Optional[Sequence[str]] = None,
        meta: Optional[dict] = None,
        origin: Optional[Sequence[int]] = None,
        parent_count: Optional[int] = None,
    ):
        n = len(rows)
        if n == 0:
            raise ConstructionError("a system needs at least one vertex")
        cap = vertex_cap()
        if n > cap:
            raise VertexCapExceeded(f"graph has {n} vertices, above the vertex cap of {cap}")
        rows = tuple(int(r) for r in rows)
        for v, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ConstructionError(f"adjacency row {v} references vertices outside range({n})")
            if (row >> v) & 1:
                raise ConstructionError(f"vertex {v} is adjacent to itself")
            for u in iter_bits(row):
                if not (rows[u] >> v) & 1:
                    raise ConstructionError(f"adjacency is not symmetric on pair ({v}, {u})")
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != n:
                raise ConstructionError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ConstructionError("vertex labels must be pairwise distinct")
        if origin is not None:
            origin = tuple(origin)
            if len(origin) != n:
                raise ConstructionError(f"expected {n} origin indices, got {len(origin)}")
            if parent_count is None or max(origin) >= parent_count:
                raise ConstructionError("origin indices need the vertex count of the original graph")
        self._rows = rows
        self._labels = labels
        self._meta = dict(meta) if meta else None
        self._origin = origin
        self._parent_count = parent_count if origin is not None else None

    # --- construction -------------------------------------------------------

    @classmethod
    def from_pair_relation(
        cls,
        n: int,
        p_pair: Callable[[int, int], bool],
        labels: Optional[Sequence[str]] = None,
        meta: Optional[dict] = None,
    ) -> "SystemGraph":
        """Build G(X, p) from the pair relation of p.

        ``p_pair`` must be reflexive and symmetric; both are checked by
        evaluating every pair in both orders.
        """
        if n <= 0:
            raise ConstructionError("a system needs at least one vertex")
        cap = vertex_cap()
        if n > cap:
            raise VertexCapExceeded(f"system has {n} vertices, above the vertex cap of {cap}")
        rows = [0] * n
        for u in range(n):
            if not p_pair(u, u):
                raise ConstructionError(f"pair relation is not reflexive at vertex {u}")
            for v in range(u + 1, n):
                forward = bool(p_pair(u, v))
                if forward != bool(p_pair(v, u)):
                    raise ConstructionError(f"pair relation is not symmetric on ({u}, {v})")
                if not forward:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        logger.debug("Built graph from pair relation: %d vertices", n)
        return cls(rows, labels=labels, meta=meta)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        meta: Optional[dict] = None,
    ) -> "SystemGraph":
        if n <= 0:
            raise ConstructionError("a system needs at least one vertex")
        rows = [0] * n
        for edge in edges:
            if len(edge) != 2:
                raise ConstructionError(f"edge {edge!r} is not a pair")
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ConstructionError(f"edge ({u}, {v}) is out of range for {n} vertices")
            if u == v:
                raise ConstructionError(f"loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise ConstructionError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows, labels=labels, meta=meta)

    # --- accessors ------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def labels(self) -> Optional[tuple]:
        return self._labels

    @property
    def meta(self) -> Optional[dict]:
        return dict(self._meta) if self._meta else None

    @property
    def origin(self) -> Optional[tuple]:
        return self._origin

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels else str(v)

    def neighbors(self, v: int) -> int:
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._rows[u] >> v) & 1 == 1

    def pair_relation(self, u: int, v: int) -> bool:
        """Read the pair relation back: {u, v} is compatible."""
        return u == v or not self.has_edge(u, v)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def edges(self) -> Iterator[tuple]:
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.vertex_count, members)

    def all_vertices(self) -> VertexSet:
        return VertexSet.full(self.vertex_count)

    def check_set(self, A: VertexSet) -> VertexSet:
        if A.universe != self.vertex_count:
            raise InvalidVertexSet(
                f"vertex set over {A.universe} vertices used with a graph of {self.vertex_count}"
            )
        return A

    def __eq__(self, other):
        if not isinstance(other, SystemGraph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SystemGraph(n={self.vertex_count}, edges={self.edge_count})"

    # --- neighbourhoods -------------------------------------------------------

    def neighborhood_mask(self, mask: int) -> int:
        """Union of the open neighbourhoods of the vertices in ``mask``."""
        out = 0
        for v in iter_bits(mask):
            out |= self._rows[v]
        return out

    def closed_neighborhood(self, A: VertexSet) -> VertexSet:
        """N[A]: A together with every vertex incompatible with some member of A."""
        self.check_set(A)
        return VertexSet(self.vertex_count, A.mask | self.neighborhood_mask(A.mask))

    def outside_neighborhood(self, A: VertexSet) -> VertexSet:
        """The complement X - N[A]."""
        return self.closed_neighborhood(A).complement()

    def induced_subgraph(self, B: VertexSet) -> "SystemGraph":
        """G[B], re-indexed in increasing order of the original indices."""
        self.check_set(B)
        if not B:
            raise PreconditionError("induced subgraph of an empty vertex set")
        kept = B.members()
        position = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for u in iter_bits(self._rows[v] & B.mask):
                row |= 1 << position[u]
            rows.append(row)
        labels = [self._labels[v] for v in kept] if self._labels else None
        if self._origin is not None:
            origin, parent_count = [self._origin[v] for v in kept], self._parent_count
        else:
            origin, parent_count = kept, self.vertex_count
        return SystemGraph(rows, labels=labels, meta=self._meta, origin=origin, parent_count=parent_count)

    def lift(self, A: VertexSet) -> VertexSet:
        """Map a vertex set of an induced subgraph back to the original indices."""
        self.check_set(A)
        if self._origin is None:
            return A
        return VertexSet.of(self._parent_count, (self._origin[v] for v in A))

    # --- connectivity ---------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    def adjacency_matrix(self) -> np.ndarray:
        n = self.vertex_count
        matrix = np.zeros((n, n), dtype=bool)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = True
        return matrix

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def connected_components(self) -> list:
        components = [
            VertexSet.of(self.vertex_count, component)
            for component in nx.connected_components(self.to_networkx())
        ]
        return sorted(components, key=lambda c: c.members()[0])
