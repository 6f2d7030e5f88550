"""
Cells of a root hyperplane arrangement
======================================

"""

from fractions import Fraction

# the positive roots of a root system cut the Cartan subalgebra into
# locally closed pieces; each piece is described by the exact set of root
# hyperplanes containing it, and those sets are the span-closed subsets
from liemod.cells import (cell_of_point, centralizer_data, enumerate_cells,
                          root_functionals)
from liemod.rootsys import RootSystemType, build_root_system

rs = build_root_system(RootSystemType("A", 3))
fset = root_functionals(rs)
cells = enumerate_cells(fset)
print(f"A3 arrangement: {len(fset.functionals)} hyperplanes, "
      f"{len(cells)} cells (the Bell number of 4)")

by_dim = {}
for c in cells:
    by_dim.setdefault(c.closure_dim, []).append(c)
for d in sorted(by_dim, reverse=True):
    print(f"  closure dimension {d}: {len(by_dim[d])} cells")

# a point knows its cell: the vanishing set of the root functionals
generic = cell_of_point(fset, [Fraction(5), Fraction(1), Fraction(9)])
print(f"\ngeneric point lies in the open cell: {sorted(generic.flat)}, "
      f"dim {generic.closure_dim}")

wall = cell_of_point(fset, [Fraction(1), Fraction(1), Fraction(2)])
print(f"point with one coincidence: roots {sorted(wall.flat)} vanish, "
      f"dim {wall.closure_dim}")

# each cell carries centralizer dimensions used by the packet dimension
# formula: dim of the centralizer, its center, and its derived part
for cell in (generic, wall, cells[-1]):
    data = centralizer_data(rs, cell)
    print(f"flat {sorted(cell.flat)}: centralizer {data.dim_centralizer}, "
          f"center {data.dim_center}, derived {data.dim_derived}")
