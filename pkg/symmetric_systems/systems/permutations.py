"""Permutations of [n], compatible when they agree in at least t points."""
from itertools import permutations
from math import factorial

from symmetric_systems.core.errors import ConstructionError
from symmetric_systems.systems.base import AlphaPrediction, BuiltSystem, SystemBuilder


def agreements(sigma: tuple, tau: tuple) -> int:
    return sum(1 for a, b in zip(sigma, tau) if a == b)


class PermutationSystem(SystemBuilder):
    kind = "perms"
    aliases = ("permutations",)

    def __init__(self):
        super().__init__("Permutations", params={
            'n': {'value': 4, 'range': (1, None)},
            't': {'value': 1, 'range': (1, None)},
        })

    def validate(self):
        super().validate()
        n, t = self.get_parameter('n'), self.get_parameter('t')
        if not 1 <= t <= n:
            raise ConstructionError(f"permutations need 1 <= t <= n, got n={n}, t={t}")

    def vertex_count(self):
        return factorial(self.get_parameter('n'))

    def enumerate_vertices(self):
        # image arrays of [1..n] in lexicographic order
        return list(permutations(range(1, self.get_parameter('n') + 1)))

    def vertex_label(self, vertex):
        return "".join(str(x) for x in vertex) if len(vertex) < 10 else ",".join(str(x) for x in vertex)

    def compatible(self, a, b):
        return agreements(a, b) >= self.get_parameter('t')

    def generator_actions(self):
        # left multiplication: sigma -> c o sigma
        n = self.get_parameter('n')
        cycle = {x: x % n + 1 for x in range(1, n + 1)}
        swap = {x: x for x in range(1, n + 1)}
        swap[1], swap[min(2, n)] = min(2, n), 1
        return [
            lambda sigma: tuple(cycle[x] for x in sigma),
            lambda sigma: tuple(swap[x] for x in sigma),
        ]

    def predicted_alpha(self):
        n, t = self.get_parameter('n'), self.get_parameter('t')
        if t == 1:
            return AlphaPrediction(factorial(n - 1), True, "all n")
        return AlphaPrediction(
            value=factorial(n - t),
            valid=False,
            condition_text=f"conjectured for n large relative to t={t}; not established here",
        )


def build_permutation_system(n: int, t: int) -> BuiltSystem:
    return PermutationSystem().configure({'n': n, 't': t}).build()
