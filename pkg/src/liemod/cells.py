"""Cells of the common-vanishing-pattern relation for linear functionals.

Two points of the ambient space are equivalent when exactly the same subset
of a fixed finite functional set vanishes on them.  The classes (cells) are
indexed by the flats of the arrangement: subsets closed under the span
operator, every functional in the span of a flat belonging to it.  For a
root system restricted to its Cartan subalgebra the cells describe
centralizer strata; positive roots suffice since a functional and its
negative cut out the same hyperplane.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .rootsys import build_root_system

__all__ = [
    "FunctionalSet", "Cell", "CentralizerData", "root_functionals",
    "enumerate_cells", "cell_of_point", "sample_point_in_cell",
    "centralizer_data",
]


@dataclass(frozen=True)
class FunctionalSet:
    """Finite list of rational covectors on a fixed ambient space."""

    ambient_dim: int
    functionals: tuple

    def __post_init__(self):
        fs = tuple(tuple(Fraction(c) for c in f) for f in self.functionals)
        object.__setattr__(self, "functionals", fs)
        if not fs:
            raise ValueError("functional set must be nonempty")
        if any(len(f) != self.ambient_dim for f in fs):
            raise ValueError("functional length does not match ambient_dim")

    def evaluate(self, index, point):
        return sum(c * x for c, x in zip(self.functionals[index], point))

    def vanishing_set(self, point):
        if len(point) != self.ambient_dim:
            raise ValueError("point has wrong length")
        return frozenset(i for i in range(len(self.functionals))
                         if self.evaluate(i, point) == 0)


@dataclass(frozen=True)
class Cell:
    """A cell, named by its flat (indices into the functional set)."""

    flat: frozenset
    closure_dim: int

    def __post_init__(self):
        object.__setattr__(self, "flat", frozenset(self.flat))


def root_functionals(rs):
    """Positive roots as functionals on the Cartan subalgebra.

    Points are written in the simple coroot basis, so the covector of a
    root is its weight-coordinate vector.
    """
    return FunctionalSet(
        ambient_dim=rs.rank,
        functionals=tuple(rs.root_weight_coords(beta)
                          for beta in rs.positive_roots))


def _rows_matrix(fset, indices):
    rows = [list(fset.functionals[i]) for i in sorted(indices)]
    if not rows:
        rows = [[Fraction(0)] * fset.ambient_dim]
    return linalg.rmat(rows)


def _flat_rank(fset, indices):
    if not indices:
        return 0
    return linalg.rank(_rows_matrix(fset, indices))


def _closure(fset, indices):
    """All functionals lying in the span of the given ones."""
    ker = linalg.kernel_basis(_rows_matrix(fset, indices))
    out = set()
    for i, f in enumerate(fset.functionals):
        if all(sum(c * v for c, v in zip(f, k)) == 0 for k in ker):
            out.add(i)
    return frozenset(out)


def _make_cell(fset, flat):
    return Cell(flat=flat,
                closure_dim=fset.ambient_dim - _flat_rank(fset, flat))


def enumerate_cells(fset):
    """One cell per flat, found by closing single-functional extensions.

    Breadth-first: every flat arises from a smaller one by adjoining one
    functional and closing, starting from the closure of the empty set.
    """
    start = _closure(fset, frozenset())
    flats = {start}
    frontier = [start]
    while frontier:
        new = []
        for flat in frontier:
            for i in range(len(fset.functionals)):
                if i in flat:
                    continue
                bigger = _closure(fset, flat | {i})
                if bigger not in flats:
                    flats.add(bigger)
                    new.append(bigger)
        frontier = new
    cells = [_make_cell(fset, flat) for flat in flats]
    cells.sort(key=lambda c: (len(c.flat), sorted(c.flat)))
    return cells


def cell_of_point(fset, point):
    """The cell containing the point; its flat is the point's vanishing set,
    which is span-closed automatically."""
    return _make_cell(fset, fset.vanishing_set(point))


def sample_point_in_cell(fset, cell, rng, max_tries=60):
    """A random rational point whose vanishing set is exactly the flat.

    Draws integer combinations of a kernel basis of the flat's span; retries
    while some functional outside the flat happens to vanish.  The generic
    combination works, so a handful of tries suffices.
    """
    ker = linalg.kernel_basis(_rows_matrix(fset, cell.flat))
    if not ker:
        point = [Fraction(0)] * fset.ambient_dim
        if fset.vanishing_set(point) == cell.flat:
            return point
        raise ValueError("flat of full rank is not the closure of the origin")
    for _ in range(max_tries):
        coeffs = [rng.randint(-9, 9) for _ in ker]
        point = [sum(c * k[i] for c, k in zip(coeffs, ker))
                 for i in range(fset.ambient_dim)]
        if fset.vanishing_set(point) == cell.flat:
            return point
    raise RuntimeError("failed to sample a generic point of the cell")


@dataclass(frozen=True)
class CentralizerData:
    """Centralizer stratification data of a cell in the Cartan.

    The centralizer of a point of the cell is the Cartan plus the root
    spaces of all roots vanishing there, so its dimension is
    rank + 2 * (number of vanishing positive roots); its center is the
    cell's closure and the complement is the derived part.
    """

    cell: Cell
    roots_vanishing: tuple
    dim_centralizer: int
    dim_center: int
    dim_derived: int


def centralizer_data(rs, cell, seed=11):
    fset = root_functionals(rs)
    nfun = len(fset.functionals)
    if any(i < 0 or i >= nfun for i in cell.flat):
        raise ValueError("cell does not belong to this root system")
    if _closure(fset, cell.flat) != cell.flat:
        raise ValueError("cell flat is not span-closed for this root system")
    expected_dim = rs.rank - _flat_rank(fset, cell.flat)
    if cell.closure_dim != expected_dim:
        raise ValueError("cell closure_dim inconsistent with this root system")

    # points of one cell share their centralizer: check two random ones
    rng = random.Random(seed)
    first = sample_point_in_cell(fset, cell, rng)
    second = sample_point_in_cell(fset, cell, rng)
    assert fset.vanishing_set(first) == fset.vanishing_set(second) == cell.flat

    vanishing = tuple(rs.positive_roots[i] for i in sorted(cell.flat))
    dim_centralizer = rs.rank + 2 * len(vanishing)
    dim_center = cell.closure_dim
    return CentralizerData(cell=cell, roots_vanishing=vanishing,
                           dim_centralizer=dim_centralizer,
                           dim_center=dim_center,
                           dim_derived=dim_centralizer - dim_center)
