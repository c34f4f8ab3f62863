"""
k-dimensional subspaces of GF(q)^n, compatible when they meet in dimension at
least t.

Subspaces are held as reduced row echelon bases, so equal subspaces have
identical rows. Only prime q is supported: arithmetic is plain modular
integers.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np
from sympy import isprime, primitive_root

from symmetric_systems.core.errors import ConstructionError
from symmetric_systems.systems.base import AlphaPrediction, BuiltSystem, SystemBuilder

logger = logging.getLogger(__name__)


def row_reduce(matrix, q: int):
    """Reduced row echelon form over GF(q); returns (matrix, pivot columns)."""
    m = np.array(matrix, dtype=np.int64) % q
    if m.ndim != 2:
        raise ConstructionError("row reduction needs a two-dimensional matrix")
    n_rows, n_cols = m.shape
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, q)) % q
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m - np.outer(factors, m[r])) % q
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def rank_mod(matrix, q: int) -> int:
    return len(row_reduce(matrix, q)[1])


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n, in exact integers."""
    if not 0 <= k <= n:
        raise ConstructionError(f"gaussian binomial needs 0 <= k <= n, got n={n}, k={k}")
    if q < 2:
        raise ConstructionError(f"gaussian binomial needs q >= 2, got {q}")
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class SubspaceBasis:
    q: int
    n: int
    rows: tuple  # k rows of n entries, reduced row echelon form

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if not rows or any(len(row) != self.n for row in rows):
            raise ConstructionError(f"basis rows must be a nonempty k x {self.n} matrix")
        reduced, pivots = row_reduce(rows, self.q)
        if len(pivots) != len(rows) or tuple(map(tuple, reduced.tolist())) != rows:
            raise ConstructionError("basis rows are not a full-rank reduced row echelon form")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def canonical(cls, matrix, q: int) -> "SubspaceBasis":
        """The canonical basis of the row space of ``matrix``."""
        reduced, pivots = row_reduce(matrix, q)
        if not pivots:
            raise ConstructionError("the zero subspace has no basis")
        return cls(q, reduced.shape[1], tuple(map(tuple, reduced[: len(pivots)].tolist())))

    @property
    def k(self) -> int:
        return len(self.rows)

    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def sort_key(self) -> tuple:
        return tuple(x for row in self.rows for x in row)

    def intersection_dim(self, other: "SubspaceBasis") -> int:
        """dim(A ∩ B) = dim A + dim B - rank of the stacked bases."""
        if (self.q, self.n) != (other.q, other.n):
            raise ConstructionError("subspaces of different ambient spaces")
        return self.k + other.k - rank_mod(np.vstack([self.matrix(), other.matrix()]), self.q)

    def transform(self, g) -> "SubspaceBasis":
        """Image under the linear map with matrix ``g`` (acting on column vectors)."""
        g = np.asarray(g, dtype=np.int64)
        if g.shape != (self.n, self.n) or rank_mod(g, self.q) < self.n:
            raise ConstructionError(f"map is not an invertible {self.n}x{self.n} matrix over GF({self.q})")
        return SubspaceBasis.canonical(self.matrix() @ g.T, self.q)

    def label(self) -> str:
        return "|".join(",".join(str(x) for x in row) for row in self.rows)


def enumerate_subspaces(n: int, k: int, q: int) -> list:
    """Every k-dimensional subspace of GF(q)^n, sorted by row-major entries."""
    if not 1 <= k <= n:
        raise ConstructionError(f"subspaces need 1 <= k <= n, got n={n}, k={k}")
    if not isprime(q):
        raise ConstructionError(f"q must be prime, got {q}")
    found = []
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivot_set]
        for values in product(range(q), repeat=len(free)):
            m = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                m[i, p] = 1
            for (i, j), x in zip(free, values):
                m[i, j] = x
            found.append(SubspaceBasis(q, n, tuple(map(tuple, m.tolist()))))
    found.sort(key=SubspaceBasis.sort_key)
    logger.debug("Enumerated %d subspaces of dimension %d in GF(%d)^%d", len(found), k, q, n)
    return found


def general_linear_generators(n: int, q: int) -> list:
    """Matrices generating GL(n, q): the n-cycle, a transvection and, for q > 2, a scalar diagonal."""
    cycle = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        cycle[(i + 1) % n, i] = 1
    gens = [cycle]
    if n >= 2:
        transvection = np.eye(n, dtype=np.int64)
        transvection[0, 1] = 1
        gens.append(transvection)
    if q > 2:
        diagonal = np.eye(n, dtype=np.int64)
        diagonal[0, 0] = int(primitive_root(q))
        gens.append(diagonal)
    return gens


class SubspaceSystem(SystemBuilder):
    kind = "subspaces"

    def __init__(self):
        super().__init__("Subspaces", params={
            'n': {'value': 4, 'range': (1, None)},
            'k': {'value': 2, 'range': (1, None)},
            'q': {'value': 2, 'range': (2, None)},
            't': {'value': 1, 'range': (1, None)},
        })

    def validate(self):
        super().validate()
        n, k, q, t = (self.get_parameter(p) for p in "nkqt")
        if not 1 <= t <= k <= n:
            raise ConstructionError(f"subspaces need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
        if not isprime(q):
            raise ConstructionError(f"q must be prime, got {q} (prime powers are not supported)")

    def vertex_count(self):
        return gaussian_binomial(self.get_parameter('n'), self.get_parameter('k'), self.get_parameter('q'))

    def enumerate_vertices(self):
        return enumerate_subspaces(self.get_parameter('n'), self.get_parameter('k'), self.get_parameter('q'))

    def vertex_label(self, vertex):
        return vertex.label()

    def compatible(self, a, b):
        return a.intersection_dim(b) >= self.get_parameter('t')

    def generator_actions(self):
        gens = general_linear_generators(self.get_parameter('n'), self.get_parameter('q'))
        return [lambda basis, g=g: basis.transform(g) for g in gens]

    def predicted_alpha(self):
        n, k, q, t = (self.get_parameter(p) for p in "nkqt")
        if t == 1:
            return AlphaPrediction(
                value=gaussian_binomial(n - 1, k - 1, q),
                valid=2 * k < n or n % k == 0,
                condition_text="2k < n or k divides n",
            )
        return AlphaPrediction(
            value=max(gaussian_binomial(n - t, k - t, q), gaussian_binomial(2 * k - t, k, q)),
            valid=n >= 2 * k - t,
            condition_text=f"n >= 2k-t = {2 * k - t}",
        )


def build_subspace_system(n: int, k: int, q: int, t: int) -> BuiltSystem:
    return SubspaceSystem().configure({'n': n, 'k': k, 'q': q, 't': t}).build()
