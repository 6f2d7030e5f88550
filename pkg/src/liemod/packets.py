"""Packets (Jordan classes) in the adjoint traceless matrix algebra.

Two traceless matrices belong to the same packet when their semisimple
parts have the same eigenvalue-coincidence pattern and their nilpotent
parts have matching Jordan blocks over corresponding eigenvalues.  The
invariant is a multiset of (multiplicity, partition) pairs, one per
eigenvalue; the eigenvalues themselves move freely inside the packet's
cell, which is why a packet of k eigenvalue groups contributes k-1
parameters of modality on top of its constant orbit dimension.

Everything concrete here is partition combinatorics: packets are
enumerated and classified for n up to 5 without any polynomial factoring,
using only squarefree decomposition and exact rank profiles.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from . import cells, linalg
from .modality import CoverPiece, modality_from_cover
from .rootsys import RootSystemType, build_root_system

__all__ = [
    "JordanTypeA", "PacketDescriptor", "SheetCheck", "SanityReport",
    "partitions_of", "conjugate_partition", "gl_centralizer_dim",
    "count_packets", "enumerate_packets_adjoint_typeA", "packet_dims",
    "classify_adjoint_typeA", "random_packet_point", "packet_sanity_suite",
    "sl_basis", "adjoint_orbit_dim",
]


def partitions_of(k):
    """Partitions of k as descending tuples, lexicographically sorted."""
    if k == 0:
        return [()]
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(k, k, [])
    return sorted(out)


def conjugate_partition(mu):
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


def gl_centralizer_dim(mu):
    """Centralizer dimension of a single nilpotent Jordan block pattern."""
    return sum(c * c for c in conjugate_partition(mu))


@dataclass(frozen=True)
class JordanTypeA:
    """Multiset of (eigenvalue multiplicity, Jordan partition) pairs."""

    block_data: tuple

    def __post_init__(self):
        data = tuple(sorted(((int(s), tuple(p)) for s, p in self.block_data),
                            key=lambda bp: (-bp[0], bp[1])))
        object.__setattr__(self, "block_data", data)
        for size, part in data:
            if sum(part) != size:
                raise ValueError("partition does not sum to its block size")

    @property
    def n(self):
        return sum(s for s, _ in self.block_data)

    @property
    def num_blocks(self):
        return len(self.block_data)

    @property
    def name(self):
        return " | ".join(f"{s}:{list(p)}" for s, p in self.block_data)


@dataclass(frozen=True)
class PacketDescriptor:
    n: int
    jordan_type: JordanTypeA
    cell: cells.Cell
    orbit_dim: int
    closure_dim: int
    modality: int
    representative: object  # traceless matrix with this Jordan type


def count_packets(n):
    """Independent combinatorial count: choose a multiset of partitions for
    every multiset of eigenvalue multiplicities summing to n."""
    total = 0
    for sizes in partitions_of(n):
        ways = 1
        for s in set(sizes):
            m = sizes.count(s)
            ways *= comb(len(partitions_of(s)) + m - 1, m)
        total += ways
    return total


def _representative_eigenvalues(sizes):
    """Distinct rationals, one per block, weighted sum zero."""
    k = len(sizes)
    raw = [Fraction(i) for i in range(k)]
    n = sum(sizes)
    mean = sum(s * c for s, c in zip(sizes, raw)) / n
    return [c - mean for c in raw]


def _representative_matrix(jt, eigenvalues=None):
    n = jt.n
    if eigenvalues is None:
        eigenvalues = _representative_eigenvalues([s for s, _ in jt.block_data])
    x = linalg.zeros(n)
    off = 0
    for (size, part), lam in zip(jt.block_data, eigenvalues):
        for p in part:
            for i in range(p):
                x[off + i, off + i] = lam
                if i + 1 < p:
                    x[off + i, off + i + 1] = 1
            off += p
    return x


def _cell_of_eigenvalues(n, sizes, eigenvalues):
    rs = build_root_system(RootSystemType("A", n - 1))
    fset = cells.root_functionals(rs)
    eig_list = []
    for s, lam in zip(sizes, eigenvalues):
        eig_list.extend([lam] * s)
    point = [sum(eig_list[: j + 1]) for j in range(n - 1)]  # coroot coords
    return cells.cell_of_point(fset, point)


def enumerate_packets_adjoint_typeA(n):
    """All packets of the rank n-1 traceless algebra, one descriptor each."""
    if not 2 <= n <= 5:
        raise ValueError("supported range is 2 <= n <= 5")
    out = []
    for sizes in partitions_of(n):
        per_size = []
        for s in sorted(set(sizes), reverse=True):
            m = sizes.count(s)
            per_size.append([
                list(zip([s] * m, choice)) for choice in
                combinations_with_replacement(partitions_of(s), m)])
        stack = [[]]
        for options in per_size:
            stack = [acc + opt for acc in stack for opt in options]
        for block_data in stack:
            jt = JordanTypeA(tuple(block_data))
            k = jt.num_blocks
            orbit = n * n - sum(gl_centralizer_dim(p) for _, p in jt.block_data)
            eigenvalues = _representative_eigenvalues([s for s, _ in jt.block_data])
            cell = _cell_of_eigenvalues(
                n, [s for s, _ in jt.block_data], eigenvalues)
            assert cell.closure_dim == k - 1
            rep = _representative_matrix(jt, eigenvalues)
            assert sum(rep[i, i] for i in range(n)) == 0
            out.append(PacketDescriptor(
                n=n, jordan_type=jt, cell=cell, orbit_dim=orbit,
                closure_dim=orbit + (k - 1), modality=k - 1,
                representative=rep))
    out.sort(key=lambda p: (-p.closure_dim, p.jordan_type.block_data))
    return out


def sl_basis(n):
    """Standard basis of the traceless matrices: off-diagonal units and
    differences of consecutive diagonal units."""
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = linalg.zeros(n)
                m[i, j] = 1
                basis.append(m)
    for k in range(n - 1):
        m = linalg.zeros(n)
        m[k, k] = 1
        m[k + 1, k + 1] = -1
        basis.append(m)
    return basis


def adjoint_orbit_dim(x):
    """Orbit dimension of a traceless matrix: rank of its bracket map."""
    n = x.shape[0]
    basis = sl_basis(n)
    cols = np.empty((n * n, len(basis)), dtype=object)
    for k, b in enumerate(basis):
        comm = np.dot(x, b) - np.dot(b, x)
        for i in range(n):
            for j in range(n):
                cols[i * n + j, k] = comm[i, j]
    return linalg.rank(cols)


def packet_dims(p):
    """Recompute (closure_dim, modality) from the representative matrix.

    The orbit dimension comes from the bracket-map rank, independent of the
    partition combinatorics used at enumeration time; a mismatch means the
    descriptor is inconsistent and raises.
    """
    orbit = adjoint_orbit_dim(p.representative)
    if orbit != p.orbit_dim:
        raise ValueError(
            f"descriptor orbit dim {p.orbit_dim} but matrix gives {orbit}")
    cell_dim = p.cell.closure_dim
    return orbit + cell_dim, cell_dim


def classify_adjoint_typeA(x):
    """Jordan type of a traceless matrix, without polynomial factoring.

    Squarefree decomposition groups eigenvalues by algebraic multiplicity e;
    inside one group the multiset of Jordan partitions is recovered from the
    kernel profile of powers, which pins it down uniquely for n <= 5.  An
    ambiguous profile (possible only for larger n) raises rather than guess.
    """
    n = x.shape[0]
    if x.shape != (n, n):
        raise ValueError("matrix must be square")
    if sum(x[i, i] for i in range(n)) != 0:
        raise ValueError("matrix must be traceless")
    p = linalg.char_poly(x)
    blocks = []
    for factor, e in linalg.squarefree_decomposition(p):
        d = linalg.poly_degree(factor)
        if d == 0:
            continue
        if e == 1:
            blocks.extend([(1, (1,))] * d)
            continue
        fmat = linalg.poly_eval_matrix(factor, x)
        profile = []
        power = linalg.eye(n)
        for _ in range(e):
            power = np.dot(power, fmat)
            profile.append(n - linalg.rank(power))
        matches = []
        for multiset in combinations_with_replacement(partitions_of(e), d):
            ok = all(
                sum(sum(min(part, k + 1) for part in mu) for mu in multiset)
                == profile[k]
                for k in range(e))
            if ok:
                matches.append(multiset)
        if len(matches) != 1:
            raise RuntimeError(
                f"kernel profile {profile} matches {len(matches)} partition "
                f"multisets; classification is ambiguous at this size")
        blocks.extend((e, mu) for mu in matches[0])
    return JordanTypeA(tuple(blocks))


def random_packet_point(descriptor, rng, shears=4):
    """A random member of the packet: fresh distinct eigenvalues with the
    same multiplicities and partitions, conjugated by unimodular shears."""
    jt = descriptor.jordan_type
    sizes = [s for s, _ in jt.block_data]
    n = descriptor.n
    k = len(sizes)
    raw = [Fraction(c) for c in rng.sample(range(-9, 10), k)]
    mean = sum(s * c for s, c in zip(sizes, raw)) / n
    lams = [c - mean for c in raw]
    x = _representative_matrix(jt, lams)
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-3, 3)
        shear = linalg.eye(n)
        shear[i, j] = c
        inv = linalg.eye(n)
        inv[i, j] = -c
        x = np.dot(np.dot(shear, x), inv)
    return x


def _center_of_centralizer(x):
    """Basis (as matrices) of the center of the centralizer of x in the
    traceless algebra."""
    n = x.shape[0]
    basis = sl_basis(n)
    cols = np.empty((n * n, len(basis)), dtype=object)
    for k, b in enumerate(basis):
        comm = np.dot(x, b) - np.dot(b, x)
        for i in range(n):
            for j in range(n):
                cols[i * n + j, k] = comm[i, j]
    cent_coords = linalg.kernel_basis(cols)
    cent = []
    for v in cent_coords:
        m = linalg.zeros(n)
        for c, b in zip(v, basis):
            if c:
                m = m + c * b
        cent.append(m)
    if not cent:
        return []
    stack = np.empty((n * n * len(cent), len(cent)), dtype=object)
    for a, u in enumerate(cent):
        for bidx, b in enumerate(cent):
            comm = np.dot(u, b) - np.dot(b, u)
            for i in range(n):
                for j in range(n):
                    stack[bidx * n * n + i * n + j, a] = comm[i, j]
    center_coords = linalg.kernel_basis(stack)
    out = []
    for v in center_coords:
        m = linalg.zeros(n)
        for c, u in zip(v, cent):
            if c:
                m = m + c * u
        out.append(m)
    return out


_HAND_SHEETS = {
    # (closure_dim, orbit_dim) per sheet, largest first
    2: ((3, 2), (0, 0)),
    3: ((8, 6), (5, 4), (0, 0)),
}


@dataclass(frozen=True)
class SheetCheck:
    sheet: tuple
    matched_packet: str
    point_orbit_dims_constant: bool


@dataclass(frozen=True)
class SanityReport:
    n: int
    samples: int
    seed: int
    packet_count: int
    coverage_ok: bool
    max_modality: int
    aggregator_ok: bool
    identity_ok: bool
    sheet_checks: tuple
    sheets_ok: bool
    regular_center_ok: bool

    @property
    def passed(self):
        return (self.coverage_ok and self.aggregator_ok and self.identity_ok
                and self.sheets_ok and self.regular_center_ok)


def packet_sanity_suite(n, samples=200, seed=2024):
    """Sampling verification of the structural facts about packets.

    Checks, in order: every random traceless matrix classifies into an
    enumerated packet; the cover aggregator over all packets returns the
    algebra rank; two samples share a packet exactly when centralizer
    dimension and coincidence pattern agree; hand-listed sheets match
    packet closures; and for nilpotent representatives, the center of the
    centralizer meets the orbit-dimension bound with equality.
    """
    if not 2 <= n <= 4:
        raise ValueError("supported range is 2 <= n <= 4")
    rng = random.Random(seed)
    packets = enumerate_packets_adjoint_typeA(n)
    by_type = {p.jordan_type: p for p in packets}

    coverage_ok = True
    sampled = []
    for _ in range(samples):
        x = linalg.zeros(n)
        for i in range(n):
            for j in range(n):
                x[i, j] = rng.randint(-4, 4)
        x[n - 1, n - 1] = -sum(x[i, i] for i in range(n - 1))
        jt = classify_adjoint_typeA(x)
        if jt not in by_type:
            coverage_ok = False
        sampled.append((x, jt))

    max_modality = modality_from_cover(
        [CoverPiece(p.closure_dim, p.orbit_dim) for p in packets])
    aggregator_ok = max_modality == n - 1

    # same packet <=> same centralizer dim and same coincidence pattern
    identity_ok = True
    for (x, jtx), (y, jty) in zip(sampled[0::2], sampled[1::2]):
        same_packet = jtx == jty
        same_invariants = (
            adjoint_orbit_dim(x) == adjoint_orbit_dim(y)
            and sorted(s for s, _ in jtx.block_data)
            == sorted(s for s, _ in jty.block_data))
        if same_packet != same_invariants:
            identity_ok = False

    sheet_checks = []
    sheets_ok = True
    for sheet in _HAND_SHEETS.get(n, ()):
        cdim, odim = sheet
        hits = [p for p in packets
                if p.closure_dim == cdim and p.orbit_dim == odim]
        if len(hits) != 1:
            sheets_ok = False
            sheet_checks.append(SheetCheck(sheet, "<unmatched>", False))
            continue
        p = hits[0]
        dims_constant = all(
            adjoint_orbit_dim(random_packet_point(p, rng)) == p.orbit_dim
            for _ in range(10))
        sheets_ok = sheets_ok and dims_constant
        sheet_checks.append(SheetCheck(sheet, p.jordan_type.name, dims_constant))

    regular_center_ok = True
    for p in packets:
        if p.jordan_type.num_blocks != 1:
            continue  # nilpotent packets only (single eigenvalue zero)
        x = p.representative
        x_orbit = adjoint_orbit_dim(x)
        center = _center_of_centralizer(x)
        best = 0
        for _ in range(12):
            y = linalg.zeros(n)
            for m in center:
                c = rng.randint(-5, 5)
                if c:
                    y = y + c * m
            od = adjoint_orbit_dim(y)
            if od > x_orbit:
                regular_center_ok = False
            best = max(best, od)
        if best != x_orbit:
            regular_center_ok = False

    return SanityReport(n=n, samples=samples, seed=seed,
                        packet_count=len(packets), coverage_ok=coverage_ok,
                        max_modality=max_modality, aggregator_ok=aggregator_ok,
                        identity_ok=identity_ok,
                        sheet_checks=tuple(sheet_checks), sheets_ok=sheets_ok,
                        regular_center_ok=regular_center_ok)
