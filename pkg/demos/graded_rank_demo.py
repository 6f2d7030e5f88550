"""
Graded Lie algebras and the rank of their degree-one action
===========================================================

"""

# a cyclic or integer grading of a simple Lie algebra is fixed by labeling
# the simple roots; the degree-zero part acts on the degree-one part, and
# the rank of that action equals the dimension of a maximal commuting
# family of semisimple degree-one elements
from liemod.graded import (GradingSpec, build_grading, cartan_subspace,
                           rank_of_grading)
from liemod.rootsys import RootSystemType

examples = [
    ("G2 with everything in degree zero", GradingSpec(
        RootSystemType("G", 2), 1, (0, 0))),
    ("A2 integer grading by the first label", GradingSpec(
        RootSystemType("A", 2), None, (1, 0))),
    ("A1 split into two pieces", GradingSpec(
        RootSystemType("A", 1), 2, (1,))),
    ("B2 order two", GradingSpec(
        RootSystemType("B", 2), 2, (0, 1))),
]

for title, spec in examples:
    ga = build_grading(spec)
    sizes = {d: len(idx) for d, idx in sorted(ga.components.items())}
    rank = rank_of_grading(ga)
    cart = cartan_subspace(ga)
    print(title)
    print(f"  components {sizes}")
    print(f"  degree-one dim {len(ga.g1_indices)}, rank {rank}, "
          f"commuting semisimple family of size {len(cart)}")
    print()

# the degree-zero grading is the whole algebra acting on itself, so its
# rank recovers the Lie algebra rank
