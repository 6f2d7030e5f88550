"""Finite-dimensional irreducible highest-weight modules, exactly.

A module is generated from a formal highest-weight vector by breadth-first
application of the simple lowering operators.  Linear dependence among the
formal monomials ``f_{i_1}...f_{i_k} v`` is decided through the contravariant
pairing, computed recursively from the relation ``[e_i, f_j] = delta_ij h_i``;
on the irreducible quotient that pairing is definite, so exact Gram-matrix
solves give both the basis and the matrix entries of the generators.

Everything is exact rational arithmetic; matrices are numpy object arrays.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .rootsys import RootSystemType, build_root_system

__all__ = [
    "BuildCeilingExceeded", "IrrepSpec", "HWModule", "weyl_dim",
    "enumerate_dominant_up_to_dim", "build_hw_module", "extend_to_full_algebra",
    "DEFAULT_BUILD_CEILING",
]

DEFAULT_BUILD_CEILING = 256


class BuildCeilingExceeded(ValueError):
    """Requested module dimension exceeds the configured build ceiling."""


@dataclass(frozen=True)
class IrrepSpec:
    """Type plus dominant highest weight in fundamental-weight coordinates."""

    rstype: RootSystemType
    highest_weight: tuple

    def __post_init__(self):
        if any(c != int(c) for c in self.highest_weight):
            raise ValueError("highest weight coefficients must be integers")
        w = tuple(int(c) for c in self.highest_weight)
        object.__setattr__(self, "highest_weight", w)
        if len(w) != self.rstype.rank:
            raise ValueError("weight length does not match rank")
        if any(c < 0 for c in w):
            raise ValueError("highest weight must be dominant")

    @property
    def name(self):
        return f"{self.rstype.name}:{','.join(map(str, self.highest_weight))}"


@dataclass
class HWModule:
    """Constructed module; treat all arrays as read-only.

    ``e``, ``f``, ``h`` hold the matrices of the simple generators in the
    monomial basis.  After ``extend_to_full_algebra`` the field ``full_basis``
    holds matrices for a basis of the whole algebra, ordered as the Cartan
    generators, then one raising vector per positive root (by height), then
    the matching lowering vectors.
    """

    spec: IrrepSpec
    dimension: int
    weights: tuple          # weight of each basis vector, weight coords
    monomials: tuple        # lowering-index sequence of each basis vector
    e: tuple
    f: tuple
    h: tuple
    full_basis: tuple = None
    basis_names: tuple = None

    @property
    def algebra_dim(self):
        rs = build_root_system(self.spec.rstype)
        return rs.dimension


def weyl_dim(spec):
    """Module dimension by the Weyl product formula, exactly."""
    rs = build_root_system(spec.rstype)
    lam = rs.weight_root_coords(spec.highest_weight)
    delta = rs.weyl_vector
    shifted = tuple(a + b for a, b in zip(lam, delta))
    num = Fraction(1)
    den = Fraction(1)
    for beta in rs.positive_roots:
        num *= rs.pairing(shifted, beta)
        den *= rs.pairing(delta, beta)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


def enumerate_dominant_up_to_dim(rstype, max_dim):
    """All nonzero dominant weights whose module dimension is at most max_dim.

    Finiteness relies on strict monotonicity of the Weyl dimension formula in
    the componentwise order, which also justifies pruning: once a weight's
    dimension exceeds the bound, every larger weight is out too.
    """
    rs = build_root_system(rstype)
    r = rs.rank
    units = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
    seen = set(units)
    frontier = list(units)
    found = []
    while frontier:
        new = []
        for w in frontier:
            if weyl_dim(IrrepSpec(rstype, w)) > max_dim:
                continue
            found.append(w)
            for j in range(r):
                nxt = tuple(c + (1 if i == j else 0) for i, c in enumerate(w))
                if nxt not in seen:
                    seen.add(nxt)
                    new.append(nxt)
        frontier = new
    return sorted(found)


def _build_module(spec):
    rs = build_root_system(spec.rstype)
    r = rs.rank
    lam = spec.highest_weight
    cartan = rs.cartan

    def mono_weight(mono):
        w = list(lam)
        for j in mono:
            for i in range(r):
                w[i] -= cartan[j][i]
        return tuple(w)

    def e_apply(j, mono):
        """Formal expansion of e_j f_{m_1}...f_{m_k} v as monomial terms."""
        terms = {}
        suffix = 0  # pairing of the suffix root sum with the j-th coroot
        for t in range(len(mono) - 1, -1, -1):
            if mono[t] == j:
                c = lam[j] - suffix
                if c:
                    rest = mono[:t] + mono[t + 1:]
                    terms[rest] = terms.get(rest, 0) + c
            suffix += cartan[mono[t]][j]
        return [(c, m) for m, c in terms.items()]

    pair_memo = {}

    def pairing(m1, m2):
        if len(m1) != len(m2) or sorted(m1) != sorted(m2):
            return 0
        if not m1:
            return 1
        key = (m1, m2)
        val = pair_memo.get(key)
        if val is None:
            head, rest = m1[0], m1[1:]
            val = 0
            for coeff, mm in e_apply(head, m2):
                if coeff:
                    val += coeff * pairing(rest, mm)
            pair_memo[key] = val
            pair_memo[(m2, m1)] = val
        return val

    # breadth-first generation; candidates within a level in lex order
    by_weight = {tuple(lam): {"basis": [()], "gram": [[1]]}}
    order = [()]
    level = [()]
    while level:
        cands = sorted({(j,) + m for m in level for j in range(r)})
        accepted = []
        for c in cands:
            mu = mono_weight(c)
            slot = by_weight.setdefault(mu, {"basis": [], "gram": []})
            basis, gram = slot["basis"], slot["gram"]
            pvec = [pairing(b, c) for b in basis]
            s = pairing(c, c)
            if basis:
                x = linalg.solve_square(linalg.rmat(gram), linalg.rvec(pvec))
                residual = s - sum(p * xi for p, xi in zip(pvec, x))
                indep = residual != 0
            else:
                indep = s != 0
            if indep:
                for row, p in zip(gram, pvec):
                    row.append(p)
                gram.append(pvec + [s])
                basis.append(c)
                accepted.append(c)
                order.append(c)
        level = accepted

    dim = len(order)
    index = {m: i for i, m in enumerate(order)}
    weights = tuple(mono_weight(m) for m in order)

    def expand(mono):
        """Coordinates of a formal monomial in the accepted basis (sparse)."""
        slot = by_weight.get(mono_weight(mono))
        if slot is None or not slot["basis"]:
            return []
        basis, gram = slot["basis"], slot["gram"]
        pvec = [pairing(b, mono) for b in basis]
        if not any(pvec):
            return []
        x = linalg.solve_square(linalg.rmat(gram), linalg.rvec(pvec))
        return [(index[b], xi) for b, xi in zip(basis, x) if xi]

    e_mats, f_mats, h_mats = [], [], []
    for j in range(r):
        fm = linalg.zeros(dim)
        em = linalg.zeros(dim)
        hm = linalg.zeros(dim)
        for col, m in enumerate(order):
            for row, val in expand((j,) + m):
                fm[row, col] = val
            acc = {}
            for coeff, mm in e_apply(j, m):
                for row, val in expand(mm):
                    acc[row] = acc.get(row, 0) + coeff * val
            for row, val in acc.items():
                if val:
                    em[row, col] = val
            hm[col, col] = weights[col][j]
        e_mats.append(em)
        f_mats.append(fm)
        h_mats.append(hm)

    for m in (*e_mats, *f_mats, *h_mats):
        m.flags.writeable = False
    return HWModule(spec=spec, dimension=dim, weights=weights,
                    monomials=tuple(order), e=tuple(e_mats), f=tuple(f_mats),
                    h=tuple(h_mats))


@lru_cache(maxsize=None)
def _build_module_cached(spec):
    return _build_module(spec)


def build_hw_module(spec, ceiling=DEFAULT_BUILD_CEILING):
    """Construct the irreducible module with the given highest weight.

    Raises BuildCeilingExceeded when the Weyl dimension formula already
    shows the module would be larger than ``ceiling``.
    """
    d = weyl_dim(spec)
    if d > ceiling:
        raise BuildCeilingExceeded(
            f"module {spec.name} has dimension {d} > ceiling {ceiling}")
    return _build_module_cached(spec)


# ---------------------------------------------------------------------------
# full algebra action: one matrix per Cartan generator and per root

def _sparse_cols(m):
    n = m.shape[0]
    return [{i: m[i, j] for i in range(n) if m[i, j]} for j in range(n)]


def _sparse_mul(a, b):
    out = []
    for bcol in b:
        acc = {}
        for i, v in bcol.items():
            for ii, av in a[i].items():
                acc[ii] = acc.get(ii, 0) + av * v
        out.append({k: v for k, v in acc.items() if v})
    return out


def _sparse_comm(a, b):
    ab = _sparse_mul(a, b)
    ba = _sparse_mul(b, a)
    out = []
    for c1, c2 in zip(ab, ba):
        acc = dict(c1)
        for k, v in c2.items():
            acc[k] = acc.get(k, 0) - v
        out.append({k: v for k, v in acc.items() if v})
    return out


def _sparse_dense(cols, n):
    m = linalg.zeros(n)
    for j, col in enumerate(cols):
        for i, v in col.items():
            m[i, j] = v
    return m


@lru_cache(maxsize=None)
def _extend_cached(spec):
    mod = _build_module_cached(spec)
    rs = build_root_system(spec.rstype)
    r = rs.rank
    n = mod.dimension
    simple_index = {}
    for j in range(r):
        beta = tuple(1 if i == j else 0 for i in range(r))
        simple_index[beta] = j
    pos_set = set(rs.positive_roots)

    x_cols, y_cols = {}, {}
    for beta in rs.positive_roots:  # height order, so summands exist already
        if sum(beta) == 1:
            j = simple_index[beta]
            x_cols[beta] = _sparse_cols(mod.e[j])
            y_cols[beta] = _sparse_cols(mod.f[j])
            continue
        for j in range(r):
            gamma = tuple(b - (1 if i == j else 0) for i, b in enumerate(beta))
            if gamma in pos_set:
                break
        else:
            raise AssertionError(f"no simple summand below root {beta}")
        alpha = tuple(1 if i == j else 0 for i in range(r))
        x_cols[beta] = _sparse_comm(x_cols[alpha], x_cols[gamma])
        y_cols[beta] = _sparse_comm(y_cols[alpha], y_cols[gamma])
        assert any(x_cols[beta]) and any(y_cols[beta]), \
            f"root vector for {beta} vanished in a faithful module"

    full = list(mod.h)
    names = [f"h{j + 1}" for j in range(r)]
    for beta in rs.positive_roots:
        full.append(_sparse_dense(x_cols[beta], n))
        names.append("x" + str(list(beta)))
    for beta in rs.positive_roots:
        full.append(_sparse_dense(y_cols[beta], n))
        names.append("y" + str(list(beta)))
    for m in full:
        m.flags.writeable = False
    return HWModule(spec=mod.spec, dimension=mod.dimension, weights=mod.weights,
                    monomials=mod.monomials, e=mod.e, f=mod.f, h=mod.h,
                    full_basis=tuple(full), basis_names=tuple(names))


def extend_to_full_algebra(mod):
    """Return the module with matrices for a full algebra basis attached.

    Root vectors for non-simple positive roots are left-normed iterated
    commutators along the smallest-index decomposition of each root; the
    lowering side mirrors the raising side, so the count is rank + #roots.
    """
    return _extend_cached(mod.spec if isinstance(mod, HWModule) else mod)
