"""Exact linear algebra: frozen examples plus randomized cross-checks.

The oracle here is an independent plain-list Gaussian elimination over
Fraction, written without reference to the implementation under test.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from liemod import linalg


def oracle_rank(rows):
    """Row-reduce a list-of-lists of Fractions; count nonzero rows."""
    m = [[Fraction(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rk = 0
    for col in range(nc):
        piv = next((i for i in range(rk, nr) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = 1 / m[rk][col]
        m[rk] = [v * inv for v in m[rk]]
        for i in range(nr):
            if i != rk and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def poly_eval_dense(coeffs, m):
    n = m.shape[0]
    out = linalg.zeros(n)
    for i in range(n):
        out[i, i] = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        out = np.dot(out, m)
        for i in range(n):
            out[i, i] += c
    return out


def test_rank_example():
    m = linalg.rmat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert linalg.rank(m) == 2


def test_kernel_example():
    m = linalg.rmat([[1, 1]])
    ker = linalg.kernel_basis(m)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] == -v[1] and v[0] != 0


def test_rank_matches_oracle_random():
    rng = random.Random(20240817)
    for _ in range(60):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 6)
        rows = [[rng.randint(-4, 4) for _ in range(nc)] for _ in range(nr)]
        assert linalg.rank(linalg.rmat(rows)) == oracle_rank(rows)


def test_rank_rectangular_and_degenerate():
    assert linalg.rank(linalg.zeros(3)) == 0
    assert linalg.rank(linalg.eye(4)) == 4
    tall = linalg.rmat([[1], [2], [3]])
    assert linalg.rank(tall) == 1


def test_kernel_dimension_and_membership():
    rng = random.Random(7)
    for _ in range(40):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)]
        m = linalg.rmat(rows)
        ker = linalg.kernel_basis(m)
        assert len(ker) == nc - linalg.rank(m)
        for v in ker:
            prod = np.dot(m, v)
            assert all(x == 0 for x in prod)
        if ker:
            stacked = linalg.rmat([list(v) for v in ker])
            assert linalg.rank(stacked) == len(ker)


def test_solve_square_and_inverse():
    m = linalg.rmat([[2, 1], [1, 1]])
    b = linalg.rvec([3, 2])
    x = linalg.solve_square(m, b)
    assert list(np.dot(m, x)) == list(b)
    inv = linalg.inverse(m)
    prod = np.dot(m, inv)
    assert all(prod[i, j] == (1 if i == j else 0) for i in range(2) for j in range(2))
    with pytest.raises(ValueError):
        linalg.solve_square(linalg.rmat([[1, 2], [2, 4]]), linalg.rvec([1, 0]))


def test_char_poly_frozen_cases():
    ident = linalg.eye(2)
    assert linalg.char_poly(ident) == [Fraction(1), Fraction(-2), Fraction(1)]
    diag = linalg.rmat([[1, 0], [0, 2]])
    assert linalg.char_poly(diag) == [Fraction(2), Fraction(-3), Fraction(1)]
    nil = linalg.rmat([[0, 1], [0, 0]])
    assert linalg.char_poly(nil) == [Fraction(0), Fraction(0), Fraction(1)]
    p, sf = linalg.char_poly_squarefree(ident)
    assert sf == [Fraction(-1), Fraction(1)]
    _, sfn = linalg.char_poly_squarefree(nil)
    assert sfn == [Fraction(0), Fraction(1)]


def test_char_poly_annihilates_matrix():
    rng = random.Random(99)
    for _ in range(25):
        n = rng.randint(1, 5)
        m = linalg.rmat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        p = linalg.char_poly(m)
        assert len(p) == n + 1 and p[-1] == 1
        assert linalg.is_zero_matrix(poly_eval_dense(p, m))


def test_poly_divmod_and_gcd():
    # (t-1)(t-2) = t^2 - 3t + 2
    a = [Fraction(2), Fraction(-3), Fraction(1)]
    b = [Fraction(-1), Fraction(1)]
    q, r = linalg.poly_divmod(a, b)
    assert r == [] or all(c == 0 for c in r)
    assert linalg.poly_normalize(linalg.poly_mul(q, b)) == a
    g = linalg.poly_gcd(a, [Fraction(-2), Fraction(1)])
    assert linalg.poly_degree(g) == 1
    assert linalg.poly_eval(g, Fraction(2)) == 0


def test_squarefree_decomposition():
    # t^2 (t-1)^3
    t = [Fraction(0), Fraction(1)]
    tm1 = [Fraction(-1), Fraction(1)]
    p = linalg.poly_mul(linalg.poly_mul(t, t),
                        linalg.poly_mul(tm1, linalg.poly_mul(tm1, tm1)))
    dec = linalg.squarefree_decomposition(p)
    dec = [(tuple(f), e) for f, e in dec if linalg.poly_degree(f) > 0]
    assert (tuple(t), 2) in dec
    assert (tuple(tm1), 3) in dec
    sf = linalg.squarefree_part(p)
    assert linalg.poly_degree(sf) == 2


def test_squarefree_properties_random():
    rng = random.Random(4242)
    for _ in range(30):
        # random monic product of small linear factors with repetition
        roots = [rng.randint(-2, 2) for _ in range(rng.randint(1, 5))]
        p = [Fraction(1)]
        for r0 in roots:
            p = linalg.poly_mul(p, [Fraction(-r0), Fraction(1)])
        sf = linalg.squarefree_part(p)
        # squarefree part divides p and has the distinct roots
        _, rem = linalg.poly_divmod(p, sf)
        assert rem == [] or all(c == 0 for c in rem)
        assert linalg.poly_degree(sf) == len(set(roots))
        for r0 in set(roots):
            assert linalg.poly_eval(sf, Fraction(r0)) == 0
