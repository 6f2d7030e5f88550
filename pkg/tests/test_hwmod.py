import random
from fractions import Fraction

import numpy as np
import pytest

from liemod.hwmod import (BuildCeilingExceeded, IrrepSpec, build_hw_module,
                          enumerate_dominant_up_to_dim,
                          extend_to_full_algebra, weyl_dim)
from liemod.rootsys import RootSystemType, build_root_system

A1 = RootSystemType("A", 1)
A2 = RootSystemType("A", 2)
B3 = RootSystemType("B", 3)
C3 = RootSystemType("C", 3)
D5 = RootSystemType("D", 5)
E6 = RootSystemType("E", 6)
F4 = RootSystemType("F", 4)
G2 = RootSystemType("G", 2)

# dimensions computable by hand or standard: natural reps, adjoints, spins
DIM_CASES = [
    (A1, (2,), 3),        # adjoint of the rank-1 algebra
    (A1, (3,), 4),
    (A2, (1, 0), 3),
    (A2, (1, 1), 8),      # adjoint
    (A2, (2, 0), 6),
    (B3, (1, 0, 0), 7),
    (B3, (0, 0, 1), 8),   # spin
    (C3, (1, 0, 0), 6),
    (C3, (0, 0, 1), 14),
    (D5, (0, 0, 0, 0, 1), 16),  # half-spin
    (E6, (1, 0, 0, 0, 0, 0), 27),
    (F4, (0, 0, 0, 1), 26),
    (G2, (1, 0), 7),
    (G2, (0, 1), 14),     # adjoint
]


@pytest.mark.parametrize("rstype,weight,dim", DIM_CASES)
def test_weyl_dimension_formula(rstype, weight, dim):
    assert weyl_dim(IrrepSpec(rstype, weight)) == dim


@pytest.mark.parametrize("rstype,weight,dim", [
    c for c in DIM_CASES if c[2] <= 27])
def test_built_dimension_matches_formula(rstype, weight, dim):
    mod = build_hw_module(IrrepSpec(rstype, weight))
    assert mod.dimension == dim
    assert mod.e[0].shape == (dim, dim)


def test_spec_validation():
    with pytest.raises(ValueError):
        IrrepSpec(A2, (1,))          # wrong length
    with pytest.raises(ValueError):
        IrrepSpec(A2, (-1, 0))       # not dominant
    with pytest.raises(ValueError):
        IrrepSpec(A2, (Fraction(1, 2), 0))  # not integral


def test_build_ceiling():
    big = IrrepSpec(A2, (9, 9))
    assert weyl_dim(big) == 1000
    with pytest.raises(BuildCeilingExceeded):
        build_hw_module(big, ceiling=256)
    # explicit larger ceiling allows it in principle; don't build it here


def test_commutation_relations():
    rs = build_root_system(A2)
    mod = build_hw_module(IrrepSpec(A2, (1, 1)))
    r = 2
    for i in range(r):
        for j in range(r):
            comm = np.dot(mod.e[i], mod.f[j]) - np.dot(mod.f[j], mod.e[i])
            target = mod.h[i] if i == j else np.zeros_like(comm)
            assert (comm == target).all()
            he = (np.dot(mod.h[i], mod.e[j]) - np.dot(mod.e[j], mod.h[i]))
            assert (he == rs.cartan[j][i] * mod.e[j]).all()
            hf = (np.dot(mod.h[i], mod.f[j]) - np.dot(mod.f[j], mod.h[i]))
            assert (hf == -rs.cartan[j][i] * mod.f[j]).all()


def test_weights_start_at_highest():
    mod = build_hw_module(IrrepSpec(G2, (1, 0)))
    assert mod.weights[0] == (1, 0)
    assert mod.monomials[0] == ()
    # weight of each basis vector drops by the applied simple roots
    rs = build_root_system(G2)
    for mono, w in zip(mod.monomials, mod.weights):
        expect = [1, 0]
        for j in mono:
            for i in range(2):
                expect[i] -= rs.cartan[j][i]
        assert tuple(expect) == w


def test_h_matrices_diagonal_with_weights():
    mod = build_hw_module(IrrepSpec(A2, (2, 0)))
    for i in range(2):
        for a in range(mod.dimension):
            for b in range(mod.dimension):
                expect = mod.weights[a][i] if a == b else 0
                assert mod.h[i][a, b] == expect


def test_enumerate_dominant_small():
    # nonzero dominant weights only
    found = enumerate_dominant_up_to_dim(A1, 5)
    assert sorted(found) == [(1,), (2,), (3,), (4,)]
    found = enumerate_dominant_up_to_dim(A2, 8)
    assert set(found) == {(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)}
    for w in found:
        assert weyl_dim(IrrepSpec(A2, w)) <= 8


def test_enumerate_dominant_monotone_in_bound():
    small = set(enumerate_dominant_up_to_dim(G2, 14))
    large = set(enumerate_dominant_up_to_dim(G2, 64))
    assert small <= large
    assert (1, 0) in small and (0, 1) in small


def test_extension_full_algebra_a2():
    rs = build_root_system(A2)
    mod = extend_to_full_algebra(IrrepSpec(A2, (1, 0)))
    assert mod.full_basis is not None
    assert len(mod.full_basis) == rs.dimension == 8
    assert mod.basis_names[0] == "h1"
    # full basis acts faithfully: flattened matrices linearly independent
    flat = np.empty((9, 8), dtype=object)
    for k, m in enumerate(mod.full_basis):
        for i in range(3):
            for j in range(3):
                flat[i * 3 + j, k] = m[i, j]
    from liemod.linalg import rank
    assert rank(flat) == 8


def test_extension_closure_under_bracket_g2():
    # brackets of basis elements stay inside the span
    rs = build_root_system(G2)
    mod = extend_to_full_algebra(IrrepSpec(G2, (1, 0)))
    basis = mod.full_basis
    n = mod.dimension
    flat = np.empty((n * n, len(basis)), dtype=object)
    for k, m in enumerate(basis):
        for i in range(n):
            for j in range(n):
                flat[i * n + j, k] = m[i, j]
    from liemod.linalg import rank
    base_rank = rank(flat)
    assert base_rank == rs.dimension == 14
    rng = random.Random(3)
    for _ in range(6):
        a, b = rng.randrange(len(basis)), rng.randrange(len(basis))
        comm = np.dot(basis[a], basis[b]) - np.dot(basis[b], basis[a])
        aug = np.empty((n * n, len(basis) + 1), dtype=object)
        aug[:, :len(basis)] = flat
        for i in range(n):
            for j in range(n):
                aug[i * n + j, len(basis)] = comm[i, j]
        assert rank(aug) == base_rank


def test_module_caching():
    a = build_hw_module(IrrepSpec(A2, (1, 1)))
    b = build_hw_module(IrrepSpec(A2, (1, 1)))
    assert a is b


def test_matrices_read_only():
    mod = build_hw_module(IrrepSpec(A1, (1,)))
    with pytest.raises(ValueError):
        mod.e[0][0, 0] = 5
