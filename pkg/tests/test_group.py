import pytest

from symmetric_systems.core.errors import InvalidPermutation, PreconditionError
from symmetric_systems.core.graph import SystemGraph, VertexSet
from symmetric_systems.core.group import (
    BlockSystem,
    GeneratorSet,
    Permutation,
    blocks_containing,
    compose,
    finest_blocks_containing,
    is_automorphism,
    is_primitive_action,
    is_transitive,
    orbit,
    set_orbit,
)


def rotation(n):
    return Permutation(tuple((i + 1) % n for i in range(n)))


def cyclic(n):
    return GeneratorSet.of([rotation(n)])


def members(sets):
    return [S.members() for S in sets]


class TestPermutation:
    def test_compose_applies_right_factor_first(self):
        p = Permutation.from_cycles(3, (0, 1))
        q = Permutation.from_cycles(3, (1, 2))
        assert compose(p, q).images == (1, 2, 0)
        assert compose(q, p).images == (2, 0, 1)

    def test_inverse(self):
        p = Permutation((2, 0, 3, 1))
        assert compose(p, p.inverse()).is_identity()

    def test_not_a_bijection(self):
        with pytest.raises(InvalidPermutation):
            Permutation((0, 0, 1))

    @pytest.mark.parametrize("images", [(1.7, 0.2), ("1", "0"), (True, False)])
    def test_images_must_be_integers(self, images):
        with pytest.raises(InvalidPermutation):
            Permutation(images)

    def test_degree_mismatch(self):
        with pytest.raises(InvalidPermutation):
            compose(Permutation.identity(2), Permutation.identity(3))
        with pytest.raises(InvalidPermutation):
            GeneratorSet(3, (Permutation.identity(2),))

    def test_image_of_a_set(self):
        assert rotation(5).image(VertexSet.of(5, [0, 4])).members() == (0, 1)


class TestOrbits:
    def test_orbit_of_cycle(self):
        assert orbit(cyclic(6), 2) == VertexSet.full(6)
        assert is_transitive(cyclic(6))

    def test_intransitive(self):
        G = GeneratorSet.of([Permutation.from_cycles(4, (0, 1))])
        assert orbit(G, 2).members() == (2,)
        assert not is_transitive(G)

    def test_set_orbit(self):
        images = set_orbit(cyclic(6), VertexSet.of(6, [0, 3]))
        assert members(images) == [(0, 3), (1, 4), (2, 5)]


class TestAutomorphisms:
    def test_rotation_of_cycle(self, c5):
        g, G = c5
        assert all(is_automorphism(g, p) for p in G)

    def test_path_reversal_only(self):
        path = SystemGraph.from_edges(3, [(0, 1), (1, 2)])
        assert is_automorphism(path, Permutation((2, 1, 0)))
        assert not is_automorphism(path, Permutation((1, 0, 2)))


class TestBlocks:
    def test_finest_blocks_of_cyclic_group(self):
        G = cyclic(6)
        assert members(finest_blocks_containing(G, 0, 3).blocks) == [(0, 3), (1, 4), (2, 5)]
        assert members(finest_blocks_containing(G, 0, 2).blocks) == [(0, 2, 4), (1, 3, 5)]
        assert finest_blocks_containing(G, 0, 1).trivial

    def test_block_system_is_preserved(self):
        G = cyclic(6)
        system = finest_blocks_containing(G, 0, 2)
        assert system.is_partition(6)
        assert system.is_preserved_by(G)
        assert system.block_of(3).members() == (1, 3, 5)

    def test_not_preserved(self):
        system = BlockSystem((VertexSet.of(4, [0, 1]), VertexSet.of(4, [2, 3])))
        assert not system.is_preserved_by(cyclic(4))
        assert not system.is_preserved_by(GeneratorSet.of([Permutation((0, 2, 1, 3))]))

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            finest_blocks_containing(cyclic(6), 1, 1)
        with pytest.raises(PreconditionError):
            finest_blocks_containing(cyclic(6), 0, 6)
        with pytest.raises(PreconditionError):
            finest_blocks_containing(GeneratorSet.of([Permutation.from_cycles(4, (0, 1))]), 0, 1)
        with pytest.raises(PreconditionError):
            is_primitive_action(GeneratorSet.of([Permutation.identity(1)]))

    def test_prime_cycle_is_primitive(self):
        assert is_primitive_action(cyclic(5)).primitive

    def test_composite_cycle_is_imprimitive(self):
        verdict = is_primitive_action(cyclic(6))
        assert not verdict.primitive
        assert not verdict.witness.trivial
        assert verdict.witness.is_preserved_by(cyclic(6))

    def test_symmetric_group_is_primitive(self):
        G = GeneratorSet.of([rotation(5), Permutation.from_cycles(5, (0, 1))])
        assert is_primitive_action(G).primitive
        assert blocks_containing(G, 0) == []

    def test_blocks_containing(self):
        assert members(blocks_containing(cyclic(6), 0)) == [(0, 3), (0, 2, 4)]


class TestSystemActions:
    def test_two_subsets_of_four_points(self, k42):
        G = k42.generators
        assert members(finest_blocks_containing(G, 0, 5).blocks) == [(0, 5), (1, 4), (2, 3)]
        verdict = is_primitive_action(G)
        assert not verdict.primitive
        assert members(verdict.witness.blocks) == [(0, 5), (1, 4), (2, 3)]
        assert members(blocks_containing(G, 0)) == [(0, 5)]

    def test_left_regular_action_of_s3(self, s3):
        G = s3.generators
        assert is_transitive(G)
        verdict = is_primitive_action(G)
        assert not verdict.primitive
        assert verdict.witness.is_preserved_by(G)
        assert sorted(len(B) for B in blocks_containing(G, 0)) == [2, 2, 2, 3]

    def test_natural_s4_is_primitive(self):
        G = GeneratorSet.of([rotation(4), Permutation.from_cycles(4, (0, 1))])
        assert is_primitive_action(G).primitive
