"""k-element subsets of [n], compatible when they share at least t elements."""
from itertools import combinations
from math import comb

from symmetric_systems.core.errors import ConstructionError
from symmetric_systems.systems.base import AlphaPrediction, BuiltSystem, SystemBuilder


def colex_subsets(n: int, k: int) -> list:
    """k-subsets of {1..n} as sorted tuples, in colexicographic order."""
    return sorted(combinations(range(1, n + 1), k), key=lambda s: tuple(reversed(s)))


class SubsetSystem(SystemBuilder):
    kind = "subsets"

    def __init__(self):
        super().__init__("k-Subsets", params={
            'n': {'value': 5, 'range': (1, None)},
            'k': {'value': 2, 'range': (1, None)},
            't': {'value': 1, 'range': (1, None)},
        })

    def validate(self):
        super().validate()
        n, k, t = (self.get_parameter(p) for p in "nkt")
        if not 1 <= t <= k <= n:
            raise ConstructionError(f"subsets need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")

    def vertex_count(self):
        return comb(self.get_parameter('n'), self.get_parameter('k'))

    def enumerate_vertices(self):
        return colex_subsets(self.get_parameter('n'), self.get_parameter('k'))

    def vertex_label(self, vertex):
        return "{" + ",".join(str(x) for x in vertex) + "}"

    def compatible(self, a, b):
        return len(set(a) & set(b)) >= self.get_parameter('t')

    def generator_actions(self):
        n = self.get_parameter('n')
        cycle = {x: x % n + 1 for x in range(1, n + 1)}
        swap = {x: x for x in range(1, n + 1)}
        swap[1], swap[min(2, n)] = min(2, n), 1
        return [
            lambda s: tuple(sorted(cycle[x] for x in s)),
            lambda s: tuple(sorted(swap[x] for x in s)),
        ]

    def predicted_alpha(self):
        n, k, t = (self.get_parameter(p) for p in "nkt")
        threshold = (k - t + 1) * (t + 1)
        return AlphaPrediction(
            value=comb(n - t, k - t),
            valid=n >= threshold,
            condition_text=f"n >= (k-t+1)(t+1) = {threshold}",
        )


def build_subset_system(n: int, k: int, t: int) -> BuiltSystem:
    return SubsetSystem().configure({'n': n, 'k': k, 't': t}).build()
