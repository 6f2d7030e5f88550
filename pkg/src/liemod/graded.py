"""Cyclic and integer gradings of the simple Lie algebras.

A grading is induced by nonnegative degree labels on the simple roots: the
degree of a root is the label-weighted sum of its coordinates, reduced mod m
when m is finite, and the Cartan sits in degree zero.  The degree-zero
component acts on the degree-one component; the rank of the grading is the
number of parameters of a generic orbit of that action, equal to the
dimension of a maximal commuting semisimple subspace of the degree-one part.

Structure constants are computed once per algebra type from a faithful
matrix construction of the smallest available module and cached; every
bracket expansion is verified by residual check, so a closure failure is an
error, never a silent wrong answer.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .hwmod import IrrepSpec, extend_to_full_algebra
from .modality import ActionSpec, generic_orbit_dim
from .rootsys import RootSystemType, build_root_system

__all__ = [
    "GradingSpec", "GradedAlgebra", "JordanPair", "StructureConstants",
    "structure_constants", "build_grading", "rank_of_grading",
    "jordan_chevalley", "decompose_graded_element", "cartan_subspace",
    "random_homogeneous_element", "killing_gram",
]

# smallest convenient faithful module per family; the last exceptional type
# only has its own algebra, so its structure constants are the costliest
_FAITHFUL_WEIGHT = {
    "A": lambda r: _unit(r, 0),
    "B": lambda r: _unit(r, 0),
    "C": lambda r: _unit(r, 0),
    "D": lambda r: _unit(r, 0),
    "G": lambda r: _unit(r, 0),
    "F": lambda r: _unit(r, 3),
    "E": lambda r: {6: _unit(r, 0), 7: _unit(r, 6), 8: _unit(r, 7)}[r],
}


def _unit(r, j):
    return tuple(1 if i == j else 0 for i in range(r))


class StructureConstants:
    """Bracket table of a simple algebra in its root-space basis.

    Basis order: Cartan generators, then raising vectors by root height,
    then the matching lowering vectors.  ``bracket[a][b]`` is a sparse dict
    mapping basis index to coefficient.
    """

    def __init__(self, rstype):
        self.rstype = rstype
        rs = build_root_system(rstype)
        spec = IrrepSpec(rstype, _FAITHFUL_WEIGHT[rstype.family](rstype.rank))
        mod = extend_to_full_algebra(spec)
        self.module = mod
        self.dim = len(mod.full_basis)
        assert self.dim == rs.dimension
        self.basis_names = mod.basis_names
        r = rs.rank
        pos = rs.positive_roots
        self.root_of_index = tuple(
            [None] * r + list(pos) + [tuple(-c for c in b) for b in pos])

        n = mod.dimension
        flat = np.empty((n * n, self.dim), dtype=object)
        for a, m in enumerate(mod.full_basis):
            for i in range(n):
                for j in range(n):
                    flat[i * n + j, a] = m[i, j]
        self._flat = flat
        self._n = n
        # pivot rows making the basis-coordinate solve square
        piv_rows = self._pivot_rows(flat)
        assert len(piv_rows) == self.dim, "module basis is not independent"
        self._piv_rows = piv_rows
        sub = np.empty((self.dim, self.dim), dtype=object)
        for i, ri in enumerate(piv_rows):
            for j in range(self.dim):
                sub[i, j] = flat[ri, j]
        self._piv_inverse = linalg.inverse(sub)

        self.bracket = [[None] * self.dim for _ in range(self.dim)]
        for a in range(self.dim):
            for b in range(a, self.dim):
                if a == b:
                    self.bracket[a][b] = {}
                    continue
                comm = (np.dot(mod.full_basis[a], mod.full_basis[b])
                        - np.dot(mod.full_basis[b], mod.full_basis[a]))
                coords = self.expand_matrix(comm)
                entry = {c: v for c, v in enumerate(coords) if v}
                self.bracket[a][b] = entry
                self.bracket[b][a] = {c: -v for c, v in entry.items()}

    @staticmethod
    def _pivot_rows(flat):
        rows = [i for i in range(flat.shape[0]) if any(flat[i, :])]
        piv = []
        basis = []  # rows kept so far, reduced copies for rank growth test
        for i in rows:
            cand = [list(flat[j, :]) for j in piv] + [list(flat[i, :])]
            if linalg.rank(linalg.rmat(cand)) == len(piv) + 1:
                piv.append(i)
                if len(piv) == flat.shape[1]:
                    break
        return piv

    def expand_matrix(self, m):
        """Coordinates of a module matrix in the algebra basis; exact, with
        a residual check so non-members raise instead of mis-expanding."""
        n = self._n
        rhs = linalg.rvec([m[ri // n, ri % n] for ri in self._piv_rows])
        coords = np.dot(self._piv_inverse, rhs)
        recon = np.dot(self._flat, coords)
        for i in range(n * n):
            if recon[i] != m[i // n, i % n]:
                raise ValueError("matrix does not lie in the algebra's image")
        return list(coords)

    def element_matrix(self, coords):
        n = self._n
        out = linalg.zeros(n)
        for a, c in enumerate(coords):
            if c:
                src = self.module.full_basis[a]
                for i in range(n):
                    for j in range(n):
                        if src[i, j]:
                            out[i, j] += c * src[i, j]
        return out

    def bracket_coords(self, u, v):
        out = [Fraction(0)] * self.dim
        for a, ca in enumerate(u):
            if not ca:
                continue
            row = self.bracket[a]
            for b, cb in enumerate(v):
                if not cb:
                    continue
                for c, s in row[b].items():
                    out[c] += ca * cb * s
        return out

    def ad_matrix(self, coords):
        m = linalg.zeros(self.dim)
        for a, ca in enumerate(coords):
            if not ca:
                continue
            for b in range(self.dim):
                for c, s in self.bracket[a][b].items():
                    m[c, b] += ca * s
        return m


@lru_cache(maxsize=None)
def structure_constants(rstype):
    return StructureConstants(rstype)


def killing_gram(rstype):
    """Trace form of the adjoint representation on the root-space basis."""
    sc = structure_constants(rstype)
    n = sc.dim
    gram = linalg.zeros(n)
    for a in range(n):
        for b in range(a, n):
            total = Fraction(0)
            for c in range(n):
                row = sc.bracket[a][c]
                if not row:
                    continue
                other = sc.bracket[b]
                for d, s in row.items():
                    total += s * other[d].get(c, 0)
            gram[a, b] = total
            gram[b, a] = total
    return gram


@dataclass(frozen=True)
class GradingSpec:
    """Degree labels on the simple roots, mod m (None means integer degrees)."""

    rstype: RootSystemType
    m: object
    labels: tuple

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if len(labels) != self.rstype.rank:
            raise ValueError("need one label per simple root")
        if any(x < 0 for x in labels):
            raise ValueError("labels must be nonnegative")
        if self.m is not None:
            if not isinstance(self.m, int) or self.m < 1:
                raise ValueError("m must be a positive integer or None")
            labels = tuple(x % self.m for x in labels)
        object.__setattr__(self, "labels", labels)

    @property
    def name(self):
        mm = "Z" if self.m is None else f"Z{self.m}"
        return f"{self.rstype.name}:{mm}:{','.join(map(str, self.labels))}"


@dataclass
class GradedAlgebra:
    spec: GradingSpec
    sc: StructureConstants
    degree_of_basis: tuple
    components: dict
    g0_indices: tuple
    g1_indices: tuple
    g0_on_g1: ActionSpec

    @property
    def dim(self):
        return self.sc.dim

    def degree_of_root(self, beta):
        d = sum(x * l for x, l in zip(beta, self.spec.labels))
        return d % self.spec.m if self.spec.m is not None else d

    def coords_of_component_vector(self, degree, comp_coords):
        idxs = self.components.get(degree, ())
        if len(comp_coords) != len(idxs):
            raise ValueError("component coordinate length mismatch")
        out = [Fraction(0)] * self.dim
        for i, c in zip(idxs, comp_coords):
            out[i] = Fraction(c)
        return out


def build_grading(spec):
    """Assemble the graded algebra for a label vector.

    Verifies bracket degree additivity on every pair of basis elements, so a
    wrong degree map cannot survive construction.
    """
    sc = structure_constants(spec.rstype)
    degs = []
    for root in sc.root_of_index:
        if root is None:
            degs.append(0)
        else:
            d = sum(x * l for x, l in zip(root, spec.labels))
            degs.append(d % spec.m if spec.m is not None else d)
    degs = tuple(degs)

    components = {}
    for idx, d in enumerate(degs):
        components.setdefault(d, []).append(idx)
    components = {d: tuple(v) for d, v in sorted(components.items())}

    for a in range(sc.dim):
        for b in range(sc.dim):
            target = degs[a] + degs[b]
            if spec.m is not None:
                target %= spec.m
            for c in sc.bracket[a][b]:
                assert degs[c] == target, \
                    f"bracket breaks grading: [{a},{b}] hits degree {degs[c]}"

    one = 1 % spec.m if spec.m is not None else 1
    g0 = components.get(0, ())
    g1 = components.get(one, ())
    pos_of = {idx: k for k, idx in enumerate(g1)}
    mats = []
    for a in g0:
        m = linalg.zeros(len(g1))
        for k, b in enumerate(g1):
            for c, s in sc.bracket[a][b].items():
                m[pos_of[c], k] = s
        mats.append(m)
    action = ActionSpec(matrices=tuple(mats), algebra_dim=len(g0),
                        space_dim=len(g1))
    return GradedAlgebra(spec=spec, sc=sc, degree_of_basis=degs,
                         components=components, g0_indices=tuple(g0),
                         g1_indices=tuple(g1), g0_on_g1=action)


def rank_of_grading(ga, trials=5, seed=2024):
    """Parameters of a generic degree-zero orbit in the degree-one part."""
    if not ga.g1_indices:
        return 0
    report = generic_orbit_dim(ga.g0_on_g1, trials=trials, seed=seed)
    return len(ga.g1_indices) - report.generic_orbit_dim


# ---------------------------------------------------------------------------
# Jordan decomposition

@dataclass(frozen=True)
class JordanPair:
    semisimple_part: object
    nilpotent_part: object


def jordan_chevalley(x):
    """Split a square rational matrix into commuting semisimple plus
    nilpotent parts by Newton iteration against the squarefree part of the
    characteristic polynomial; exact, and immediate when the characteristic
    polynomial is already squarefree."""
    n = x.shape[0]
    p = linalg.char_poly(x)
    dec = linalg.squarefree_decomposition(p)
    e_max = max((e for _, e in dec), default=1)
    sf = [Fraction(1)]
    for f, _ in dec:
        sf = linalg.poly_mul(sf, f)
    if e_max == 1:
        return JordanPair(semisimple_part=x, nilpotent_part=linalg.zeros(n))
    dsf = linalg.poly_derivative(sf)
    y = x
    steps = 0
    while True:
        val = linalg.poly_eval_matrix(sf, y)
        if linalg.is_zero_matrix(val):
            break
        dval = linalg.poly_eval_matrix(dsf, y)
        y = y - np.dot(linalg.inverse(dval), val)
        steps += 1
        assert steps <= e_max.bit_length() + 2, "iteration failed to settle"
    return JordanPair(semisimple_part=y, nilpotent_part=x - y)


def decompose_graded_element(ga, coords):
    """Jordan decomposition of an algebra element given by coordinates.

    Computed on the element's matrix in the structure module and pulled back
    through the verified expansion; faithful representations preserve the
    decomposition, so the pullback always succeeds.
    """
    mat = ga.sc.element_matrix(coords)
    pair = jordan_chevalley(mat)
    s_coords = ga.sc.expand_matrix(pair.semisimple_part)
    n_coords = [Fraction(c) - s for c, s in zip(coords, s_coords)]
    return s_coords, n_coords


def random_homogeneous_element(ga, degree, rng, box=6):
    idxs = ga.components.get(degree, ())
    coords = [Fraction(0)] * ga.dim
    for i in idxs:
        coords[i] = Fraction(rng.randint(-box, box))
    return coords


def _in_span(vectors, v):
    if not vectors:
        return not any(v)
    stacked = linalg.rmat([list(u) for u in vectors])
    aug = linalg.rmat([list(u) for u in vectors] + [list(v)])
    return linalg.rank(stacked) == linalg.rank(aug)


def cartan_subspace(ga, seed=2024, max_retries=8):
    """A maximal commuting family of semisimple degree-one elements.

    Iterates: sample in the current centralizer slice of the degree-one
    part, keep the semisimple part of the sample when it adds a new
    direction, cut the slice down to its centralizer, repeat.  Stops when
    repeated escalating samples yield nothing new, which for a correct
    grading means the slice has no semisimple directions left outside the
    current span.  Returns full-basis coordinate vectors.
    """
    rng = random.Random(seed)
    g1 = ga.g1_indices
    if not g1:
        return []
    # slice basis: full-coordinate unit vectors spanning the degree-one part
    slice_basis = []
    for idx in g1:
        v = [Fraction(0)] * ga.dim
        v[idx] = Fraction(1)
        slice_basis.append(v)
    found = []
    while slice_basis:
        progressed = False
        for attempt in range(max_retries):
            box = 3 + 2 * attempt
            coeffs = [rng.randint(-box, box) for _ in slice_basis]
            x = [sum(c * v[i] for c, v in zip(coeffs, slice_basis))
                 for i in range(ga.dim)]
            if not any(x):
                continue
            s, _ = decompose_graded_element(ga, x)
            if not any(s) or _in_span(found, s):
                continue
            found.append(tuple(s))
            # restrict the slice to the centralizer of the new element
            ad_s = ga.sc.ad_matrix(s)
            images = [np.dot(ad_s, linalg.rvec(list(v))) for v in slice_basis]
            cons = np.empty((ga.dim, len(slice_basis)), dtype=object)
            for j, img in enumerate(images):
                for i in range(ga.dim):
                    cons[i, j] = img[i]
            kernel = linalg.kernel_basis(cons)
            slice_basis = [
                [sum(k[j] * v[i] for j, v in enumerate(slice_basis))
                 for i in range(ga.dim)] for k in kernel]
            progressed = True
            break
        if not progressed:
            break
    return found
