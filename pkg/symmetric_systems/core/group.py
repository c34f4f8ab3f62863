"""
Permutation groups given by generators: orbits, automorphism checks, block
systems and primitivity of the action.

The group itself is never materialised; every algorithm here works from the
generators alone.
"""
from __future__ import annotations

import logging
import numbers
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from networkx.utils import UnionFind

from symmetric_systems.core.errors import InvalidPermutation, PreconditionError
from symmetric_systems.core.graph import SystemGraph, VertexSet, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        if any(isinstance(x, bool) or not isinstance(x, numbers.Integral) for x in self.images):
            raise InvalidPermutation(f"images {list(self.images)!r} are not all integers")
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"images {list(images)} are not a bijection on range({len(images)})")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def image_mask(self, mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= 1 << self.images[v]
        return out

    def image(self, A: VertexSet) -> VertexSet:
        if A.universe != self.degree:
            raise InvalidPermutation(f"permutation of degree {self.degree} applied to a set over {A.universe}")
        return VertexSet(A.universe, self.image_mask(A.mask))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(x) = p(q(x))."""
    if p.degree != q.degree:
        raise InvalidPermutation(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(p.images[y] for y in q.images))


@dataclass(frozen=True)
class GeneratorSet:
    degree: int
    gens: tuple

    def __post_init__(self):
        gens = tuple(self.gens)
        if not gens:
            raise InvalidPermutation("a generator set needs at least one permutation")
        for g in gens:
            if g.degree != self.degree:
                raise InvalidPermutation(f"generator of degree {g.degree} in a set of degree {self.degree}")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, gens: Iterable[Permutation]) -> "GeneratorSet":
        gens = tuple(gens)
        if not gens:
            raise InvalidPermutation("a generator set needs at least one permutation")
        return cls(gens[0].degree, gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


@dataclass(frozen=True)
class BlockSystem:
    blocks: tuple

    @property
    def trivial(self) -> bool:
        return len(self.blocks) == 1 or all(len(b) == 1 for b in self.blocks)

    def is_partition(self, degree: int) -> bool:
        covered = 0
        for block in self.blocks:
            if not block or covered & block.mask:
                return False
            covered |= block.mask
        return covered == (1 << degree) - 1

    def is_preserved_by(self, G: "GeneratorSet") -> bool:
        cells = {block.mask for block in self.blocks}
        return all(g.image_mask(mask) in cells for g in G for mask in cells)

    def block_of(self, x: int) -> VertexSet:
        for block in self.blocks:
            if x in block:
                return block
        raise PreconditionError(f"point {x} is not covered by the block system")


@dataclass(frozen=True)
class ActionVerdict:
    primitive: bool
    witness: Optional[BlockSystem] = None


def orbit(G: GeneratorSet, x: int) -> VertexSet:
    """Smallest generator-closed set containing ``x``."""
    if not 0 <= x < G.degree:
        raise PreconditionError(f"point {x} out of range for degree {G.degree}")
    seen = 1 << x
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for g in G:
            z = g.images[y]
            if not (seen >> z) & 1:
                seen |= 1 << z
                queue.append(z)
    return VertexSet(G.degree, seen)


def is_transitive(G: GeneratorSet) -> bool:
    return len(orbit(G, 0)) == G.degree


def is_automorphism(g: SystemGraph, p: Permutation) -> bool:
    """True iff ``p`` maps edges to edges and non-edges to non-edges."""
    if p.degree != g.vertex_count:
        raise InvalidPermutation(f"permutation of degree {p.degree} on a graph of {g.vertex_count} vertices")
    return all(p.image_mask(g.neighbors(v)) == g.neighbors(p.images[v]) for v in range(g.vertex_count))


def set_orbit(G: GeneratorSet, D: VertexSet) -> list:
    """Every image of ``D`` under the generated group, sorted."""
    seen = {D.mask}
    queue = deque([D.mask])
    while queue:
        mask = queue.popleft()
        for g in G:
            image = g.image_mask(mask)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted((VertexSet(G.degree, m) for m in seen), key=VertexSet.sort_key)


def _require_transitive(G: GeneratorSet):
    if not is_transitive(G):
        raise PreconditionError("the generators do not act transitively")


def _finest_blocks(G: GeneratorSet, seeds: Sequence[int]) -> BlockSystem:
    # merge the seeds, then push every merged pair through the generators
    uf = UnionFind(range(G.degree))
    pairs = deque()
    first = seeds[0]
    for other in seeds[1:]:
        if uf[first] != uf[other]:
            uf.union(first, other)
            pairs.append((first, other))
    while pairs:
        x, y = pairs.popleft()
        for g in G:
            gx, gy = uf[g.images[x]], uf[g.images[y]]
            if gx != gy:
                uf.union(gx, gy)
                pairs.append((gx, gy))
    cells = [VertexSet.of(G.degree, cell) for cell in uf.to_sets()]
    return BlockSystem(tuple(sorted(cells, key=VertexSet.sort_key)))


def finest_blocks_containing(G: GeneratorSet, a: int, b: int) -> BlockSystem:
    """The finest block system in which ``a`` and ``b`` share a block."""
    if a == b:
        raise PreconditionError("finest block system needs two distinct points")
    for x in (a, b):
        if not 0 <= x < G.degree:
            raise PreconditionError(f"point {x} out of range for degree {G.degree}")
    _require_transitive(G)
    return _finest_blocks(G, [a, b])


def is_primitive_action(G: GeneratorSet) -> ActionVerdict:
    if G.degree < 2:
        raise PreconditionError("primitivity needs degree at least 2")
    _require_transitive(G)
    for b in range(1, G.degree):
        system = _finest_blocks(G, [0, b])
        if not system.trivial:
            logger.debug("action is imprimitive: blocks of size %d", len(system.blocks[0]))
            return ActionVerdict(False, system)
    return ActionVerdict(True)


def blocks_containing(G: GeneratorSet, x: int) -> list:
    """Every nontrivial block containing ``x``, smallest first."""
    _require_transitive(G)
    full = (1 << G.degree) - 1
    found = {}
    queue = deque()
    for b in range(G.degree):
        if b != x:
            queue.append((x, b))
    visited = set()
    while queue:
        seeds = queue.popleft()
        if seeds in visited:
            continue
        visited.add(seeds)
        block = _finest_blocks(G, list(seeds)).block_of(x)
        if block.mask == full or block.mask in found:
            continue
        found[block.mask] = block
        members = block.members()
        for c in range(G.degree):
            if c not in block:
                queue.append(members + (c,))
    return sorted(found.values(), key=lambda B: (len(B), B.members()))
