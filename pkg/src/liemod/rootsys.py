"""Finite crystallographic root systems in Bourbaki numbering.

A root system is built from its Cartan matrix, with roots represented as
integer coordinate vectors in the simple-root basis.  Weights are integer
vectors in the fundamental-weight basis.  The invariant bilinear form is
normalized so long roots have squared length 2.

Conventions: ``cartan[i][j]`` is the pairing of the i-th simple root with
the j-th simple coroot, so the reflection ``s_j`` sends ``alpha_i`` to
``alpha_i - cartan[i][j] * alpha_j``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg

__all__ = ["RootSystemType", "RootSystem", "build_root_system"]

_RANK_FLOORS = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
_RANK_CEILS = {"E": 8, "F": 4, "G": 2}


@dataclass(frozen=True, order=True)
class RootSystemType:
    """A simple type label: family letter plus rank.

    Rank conventions: A needs rank >= 1, C >= 2, D >= 4, E in 6..8,
    F = 4, G = 2.  B is accepted down to rank 2 for internal use even
    though classification tables only start at B_3; B_2 and C_2 carry
    distinct (transposed) Cartan data.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_FLOORS:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < _RANK_FLOORS[self.family]:
            raise ValueError(f"rank {self.rank} too small for type {self.family}")
        if self.rank > _RANK_CEILS.get(self.family, 10 ** 9):
            raise ValueError(f"rank {self.rank} too large for type {self.family}")

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text):
        """Parse labels like ``A2`` or ``E7``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse root system type {text!r}")
        return cls(text[0].upper(), int(text[1:]))


def _cartan_matrix(family, rank):
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(rank - 1):
            bond(i, i + 1)
        if family == "B" and rank >= 2:
            bond(rank - 2, rank - 1, -2, -1)  # last simple root short
        if family == "C" and rank >= 2:
            bond(rank - 2, rank - 1, -1, -2)  # last simple root long
    elif family == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)  # first simple root short
    return a


def _half_lengths(family, rank):
    """Half squared lengths of the simple roots (long root = 1)."""
    d = [Fraction(1)] * rank
    if family == "B":
        d[rank - 1] = Fraction(1, 2)
    elif family == "C":
        for i in range(rank - 1):
            d[i] = Fraction(1, 2)
    elif family == "F":
        d[2] = d[3] = Fraction(1, 2)
    elif family == "G":
        d[0] = Fraction(1, 3)
    return d


class RootSystem:
    """Root data for one simple type; construct via build_root_system."""

    def __init__(self, rstype):
        self.rstype = rstype
        r = rstype.rank
        self.rank = r
        self.cartan = _cartan_matrix(rstype.family, r)
        self._d = _half_lengths(rstype.family, r)
        # symmetrized form on root coordinates: B[i][j] = (alpha_i, alpha_j)
        self._form = [[Fraction(self.cartan[i][j]) * self._d[j] for j in range(r)]
                      for i in range(r)]
        for i in range(r):
            for j in range(r):
                assert self._form[i][j] == self._form[j][i]
        self.positive_roots = self._generate_positive_roots()
        self._pos_index = {b: k for k, b in enumerate(self.positive_roots)}
        at = linalg.rmat([[self.cartan[j][i] for j in range(r)] for i in range(r)])
        fw = linalg.inverse(at)  # columns are fundamental weights in root coords
        self.fundamental_weights = tuple(
            tuple(fw[i, k] for i in range(r)) for k in range(r))
        self.weyl_vector = tuple(
            sum(w[i] for w in self.fundamental_weights) for i in range(r))
        half_sum = tuple(Fraction(sum(b[i] for b in self.positive_roots), 2)
                         for i in range(r))
        assert self.weyl_vector == half_sum

    # -- root generation ---------------------------------------------------

    def _reflect_root(self, beta, j):
        c = sum(beta[i] * self.cartan[i][j] for i in range(self.rank))
        out = list(beta)
        out[j] -= c
        return tuple(out)

    def _generate_positive_roots(self):
        simples = [tuple(1 if i == j else 0 for i in range(self.rank))
                   for j in range(self.rank)]
        roots = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for beta in frontier:
                for j in range(self.rank):
                    g = self._reflect_root(beta, j)
                    if g not in roots:
                        roots.add(g)
                        new.append(g)
            frontier = new
        pos = [b for b in roots if all(x >= 0 for x in b)]
        assert 2 * len(pos) == len(roots)
        return tuple(sorted(pos, key=lambda b: (sum(b), b)))

    # -- pairings and coordinate changes ------------------------------------

    def pairing(self, x, y):
        """Invariant form on vectors given in root coordinates."""
        return sum(Fraction(x[i]) * self._form[i][j] * Fraction(y[j])
                   for i in range(self.rank) for j in range(self.rank))

    def root_weight_coords(self, beta):
        """Fundamental-weight coordinates of a root-coordinate vector."""
        return tuple(sum(beta[j] * self.cartan[j][i] for j in range(self.rank))
                     for i in range(self.rank))

    def weight_root_coords(self, weight):
        """Root coordinates (rational) of a weight given in weight coords."""
        return tuple(sum(Fraction(weight[k]) * self.fundamental_weights[k][i]
                         for k in range(self.rank)) for i in range(self.rank))

    def simple_reflection_weight(self, j, weight):
        """Apply s_j to a vector in fundamental-weight coordinates."""
        c = weight[j]
        return tuple(weight[i] - c * self.cartan[j][i] for i in range(self.rank))

    def is_dominant(self, weight):
        return all(c >= 0 for c in weight)

    def dominant_representative(self, weight):
        """The dominant weight in the Weyl orbit of ``weight``."""
        w = tuple(weight)
        while True:
            j = next((i for i, c in enumerate(w) if c < 0), None)
            if j is None:
                return w
            w = self.simple_reflection_weight(j, w)

    def dominant_dual(self, weight):
        """Highest weight of the dual module: the negated weight made dominant."""
        if not self.is_dominant(weight):
            raise ValueError("dominant_dual expects a dominant weight")
        return self.dominant_representative(tuple(-c for c in weight))

    @property
    def num_positive_roots(self):
        return len(self.positive_roots)

    @property
    def dimension(self):
        """Dimension of the simple Lie algebra of this type."""
        return self.rank + 2 * self.num_positive_roots

    def __repr__(self):
        return f"RootSystem({self.rstype.name})"


@lru_cache(maxsize=None)
def build_root_system(rstype):
    return RootSystem(rstype)
