from math import comb, factorial

import numpy as np
import pytest

from symmetric_systems.core.config import VERTEX_CAP_ENV
from symmetric_systems.core.errors import ConstructionError, VertexCapExceeded
from symmetric_systems.core.group import is_automorphism, is_transitive
from symmetric_systems.systems import (
    SYSTEM_ALIASES,
    SYSTEM_TYPES,
    SystemDescriptor,
    build_system,
    predicted_alpha,
)
from symmetric_systems.systems.permutations import build_permutation_system
from symmetric_systems.systems.subsets import build_subset_system, colex_subsets
from symmetric_systems.systems.subspaces import (
    SubspaceBasis,
    build_subspace_system,
    enumerate_subspaces,
    gaussian_binomial,
    rank_mod,
    row_reduce,
)

SMALL_SYSTEMS = [
    "subsets:n=4,k=2,t=1",
    "subsets:n=5,k=2,t=1",
    "subsets:n=6,k=3,t=2",
    "subsets:n=4,k=2,t=2",
    "subspaces:n=2,k=1,q=2,t=1",
    "subspaces:n=3,k=1,q=3,t=1",
    "subspaces:n=4,k=2,q=2,t=1",
    "subspaces:n=4,k=2,q=3,t=2",
    "perms:n=3,t=1",
    "perms:n=3,t=2",
    "perms:n=4,t=1",
    "perms:n=4,t=2",
]


class TestDescriptor:
    def test_parse_and_print(self):
        d = SystemDescriptor.parse("subsets:n=5,k=2,t=1")
        assert d.kind == "subsets"
        assert d.as_dict() == {"n": 5, "k": 2, "t": 1}
        assert str(d) == "subsets:n=5,k=2,t=1"

    @pytest.mark.parametrize("text", ["subsets", "subsets:n=x", "subsets:n=5,n=6", "subsets:=3", "subsets:n"])
    def test_malformed(self, text):
        with pytest.raises(ConstructionError):
            SystemDescriptor.parse(text)

    def test_registry(self):
        assert {"subsets", "subspaces", "perms"} <= set(SYSTEM_TYPES)
        assert SYSTEM_ALIASES["permutations"] == "perms"

    def test_alias_builds_the_same_system(self):
        assert build_system("permutations:n=3,t=1").graph == build_system("perms:n=3,t=1").graph

    @pytest.mark.parametrize("text", [
        "graphs:n=3",
        "subsets:n=5,k=2",
        "subsets:n=5,k=2,t=1,q=2",
        "subsets:n=3,k=4,t=1",
        "subsets:n=5,k=2,t=0",
        "perms:n=3,t=4",
    ])
    def test_invalid_systems(self, text):
        with pytest.raises(ConstructionError):
            build_system(text)


class TestSubsets:
    def test_colex_order(self):
        assert colex_subsets(4, 2) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]

    def test_three_matching(self, k42):
        g = k42.graph
        assert g.labels == ("{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}")
        assert list(g.edges()) == [(0, 5), (1, 4), (2, 3)]

    def test_petersen(self, petersen):
        g = petersen.graph
        assert g.vertex_count == 10
        assert g.edge_count == 15
        assert all(g.degree(v) == 3 for v in range(10))

    def test_full_intersection_is_complete(self):
        g = build_subset_system(4, 2, 2).graph
        assert g.edge_count == comb(6, 2)

    def test_vertex_count(self):
        assert build_subset_system(7, 3, 1).graph.vertex_count == comb(7, 3)


class TestPermutations:
    def test_two_triangles(self, s3):
        g = s3.graph
        assert g.labels == ("123", "132", "213", "231", "312", "321")
        assert g.edge_count == 6
        assert [c.members() for c in g.connected_components()] == [(0, 3, 4), (1, 2, 5)]

    def test_full_agreement_is_complete(self):
        assert build_permutation_system(3, 3).graph.edge_count == 15

    def test_derangement_graph(self):
        g = build_permutation_system(4, 1).graph
        assert g.vertex_count == factorial(4)
        assert all(g.degree(v) == 9 for v in range(24))

    def test_vertex_cap(self):
        with pytest.raises(VertexCapExceeded):
            build_permutation_system(7, 1)

    def test_vertex_cap_can_be_raised(self, monkeypatch):
        monkeypatch.setenv(VERTEX_CAP_ENV, "10")
        with pytest.raises(VertexCapExceeded):
            build_permutation_system(4, 1)


class TestSubspaces:
    @pytest.mark.parametrize("n, k, q, expected", [(4, 0, 2, 1), (4, 2, 2, 35), (3, 1, 3, 13), (5, 2, 2, 155)])
    def test_gaussian_binomial(self, n, k, q, expected):
        assert gaussian_binomial(n, k, q) == expected

    def test_gaussian_binomial_preconditions(self):
        with pytest.raises(ConstructionError):
            gaussian_binomial(2, 3, 2)
        with pytest.raises(ConstructionError):
            gaussian_binomial(3, 1, 1)

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_enumeration_counts(self, n, q):
        for k in range(1, n + 1):
            assert len(enumerate_subspaces(n, k, q)) == gaussian_binomial(n, k, q)

    def test_enumeration_is_sorted_and_canonical(self):
        subspaces = enumerate_subspaces(3, 2, 2)
        keys = [S.sort_key() for S in subspaces]
        assert keys == sorted(keys)
        assert len(set(subspaces)) == len(subspaces)

    def test_lines_of_the_plane(self):
        g = build_subspace_system(2, 1, 2, 1).graph
        assert g.vertex_count == 3
        assert g.edge_count == 3

    def test_lines_of_projective_space(self):
        built = build_subspace_system(4, 2, 2, 1)
        assert built.graph.vertex_count == 35

    def test_prime_powers_rejected(self):
        with pytest.raises(ConstructionError, match="q must be prime"):
            build_system("subspaces:n=4,k=2,q=4,t=1")

    def test_row_reduce(self):
        reduced, pivots = row_reduce([[2, 1, 0], [1, 1, 1]], 3)
        assert pivots == (0, 1)
        assert reduced.tolist() == [[1, 0, 2], [0, 1, 2]]
        assert rank_mod([[1, 1], [2, 2]], 3) == 1

    def test_canonical_form(self):
        A = SubspaceBasis.canonical([[0, 1, 1], [1, 1, 0]], 2)
        assert A.rows == ((1, 0, 1), (0, 1, 1))
        assert SubspaceBasis.canonical(A.matrix(), 2) == A

    def test_rows_must_be_reduced(self):
        with pytest.raises(ConstructionError):
            SubspaceBasis(2, 3, ((1, 1, 0), (1, 0, 0)))

    def test_intersection_dimension(self):
        A = SubspaceBasis.canonical([[1, 0, 0], [0, 1, 0]], 2)
        B = SubspaceBasis.canonical([[0, 1, 0], [0, 0, 1]], 2)
        assert A.intersection_dim(B) == B.intersection_dim(A) == 1
        assert A.intersection_dim(A) == 2

    def test_transform_stays_canonical(self):
        A = enumerate_subspaces(3, 2, 3)[4]
        g = np.array([[1, 2, 0], [0, 1, 1], [1, 0, 2]])
        image = A.transform(g)
        assert image.k == 2
        assert SubspaceBasis.canonical(image.matrix(), 3) == image

    def test_singular_map_rejected(self):
        A = enumerate_subspaces(3, 2, 3)[4]
        with pytest.raises(ConstructionError):
            A.transform(np.array([[1, 2, 0], [0, 1, 1], [1, 0, 1]]))
        with pytest.raises(ConstructionError):
            A.transform(np.eye(2, dtype=np.int64))


@pytest.mark.parametrize("descriptor", SMALL_SYSTEMS)
def test_generators_certify_symmetry(descriptor):
    built = build_system(descriptor)
    assert built.generators.degree == built.graph.vertex_count
    assert all(is_automorphism(built.graph, p) for p in built.generators)
    assert is_transitive(built.generators)


@pytest.mark.parametrize("descriptor, value, valid", [
    ("subsets:n=5,k=2,t=1", 4, True),
    ("subsets:n=4,k=2,t=1", 3, True),
    ("subsets:n=7,k=3,t=1", 15, True),
    ("subsets:n=6,k=3,t=2", 4, True),
    ("subsets:n=5,k=3,t=2", 3, False),
    ("subspaces:n=4,k=2,q=2,t=1", 7, True),
    ("subspaces:n=5,k=2,q=2,t=1", 15, True),
    ("subspaces:n=6,k=4,q=2,t=1", gaussian_binomial(5, 3, 2), False),
    ("subspaces:n=4,k=2,q=2,t=2", 1, True),
    ("perms:n=4,t=1", 6, True),
    ("perms:n=4,t=2", 2, False),
])
def test_predicted_alpha(descriptor, value, valid):
    prediction = predicted_alpha(descriptor)
    assert prediction.value == value
    assert prediction.valid is valid
    assert prediction.condition_text
