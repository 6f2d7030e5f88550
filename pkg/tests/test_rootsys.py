"""Root system construction against closed-form counts and known matrices."""

from fractions import Fraction

import pytest

from liemod.rootsys import RootSystemType, build_root_system


def expected_positive_count(family, rank):
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
            ("F", 4): 24, ("G", 2): 6}[(family, rank)]


ALL_TYPES = (
    [("A", r) for r in range(1, 7)]
    + [("B", r) for r in range(2, 6)]
    + [("C", r) for r in range(2, 6)]
    + [("D", r) for r in range(4, 7)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_positive_root_counts(family, rank):
    rs = build_root_system(RootSystemType(family, rank))
    assert len(rs.positive_roots) == expected_positive_count(family, rank)
    assert rs.dimension == rank + 2 * len(rs.positive_roots)


def test_g2_cartan_matrix():
    rs = build_root_system(RootSystemType("G", 2))
    assert rs.cartan == [[2, -1], [-3, 2]]


def test_b2_c2_cartan_transposes():
    b2 = build_root_system(RootSystemType("B", 2)).cartan
    c2 = build_root_system(RootSystemType("C", 2)).cartan
    assert b2 == [[2, -2], [-1, 2]]
    assert c2 == [[2, -1], [-2, 2]]


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_pairing_positive_on_roots(family, rank):
    rs = build_root_system(RootSystemType(family, rank))
    for beta in rs.positive_roots:
        assert rs.pairing(beta, beta) > 0


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_simple_reflections_permute_roots(family, rank):
    rs = build_root_system(RootSystemType(family, rank))
    allroots = set(rs.positive_roots) | {
        tuple(-c for c in b) for b in rs.positive_roots}
    for j in range(rank):
        image = {rs._reflect_root(b, j) for b in allroots}
        assert image == allroots


def test_weight_coord_roundtrip():
    rs = build_root_system(RootSystemType("F", 4))
    for beta in rs.positive_roots[:8]:
        w = rs.root_weight_coords(beta)
        back = rs.weight_root_coords(w)
        assert tuple(back) == tuple(Fraction(b) for b in beta)


def test_fundamental_weights_pair_to_identity():
    rs = build_root_system(RootSystemType("E", 6))
    # <w_i, alpha_j^vee> = delta_ij, read off in weight coordinates
    for i, fw in enumerate(rs.fundamental_weights):
        coords = rs.root_weight_coords(fw)
        assert list(coords) == [Fraction(1) if j == i else Fraction(0)
                                for j in range(rs.rank)]


def test_dominant_representative_and_dual():
    a2 = build_root_system(RootSystemType("A", 2))
    # dual of the first fundamental weight is the second, and vice versa
    assert a2.dominant_dual((1, 0)) == (0, 1)
    assert a2.dominant_dual((0, 1)) == (1, 0)
    assert a2.dominant_dual((1, 1)) == (1, 1)

    a3 = build_root_system(RootSystemType("A", 3))
    assert a3.dominant_dual((2, 1, 0)) == (0, 1, 2)

    b3 = build_root_system(RootSystemType("B", 3))
    c3 = build_root_system(RootSystemType("C", 3))
    d4 = build_root_system(RootSystemType("D", 4))
    g2 = build_root_system(RootSystemType("G", 2))
    for rs in (b3, c3, g2):
        for w in [(1, 0, 0)[: rs.rank], (0, 1, 1)[: rs.rank], (2, 0, 1)[: rs.rank]]:
            assert rs.dominant_dual(w) == w
    # D4: dual is trivial (rank even)
    assert d4.dominant_dual((1, 0, 0, 0)) == (1, 0, 0, 0)
    assert d4.dominant_dual((0, 0, 1, 0)) == (0, 0, 1, 0)

    d5 = build_root_system(RootSystemType("D", 5))
    # odd orthogonal-type D swaps the two spin nodes
    assert d5.dominant_dual((0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1)

    e6 = build_root_system(RootSystemType("E", 6))
    assert e6.dominant_dual((1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)


def test_dominant_dual_is_involutive():
    import random
    rng = random.Random(3)
    for name in ("A4", "D5", "E6", "B3"):
        rs = build_root_system(RootSystemType.parse(name))
        for _ in range(10):
            w = tuple(rng.randint(0, 3) for _ in range(rs.rank))
            assert rs.dominant_dual(rs.dominant_dual(w)) == w


def test_dominant_representative_fixed_points():
    rs = build_root_system(RootSystemType("A", 2))
    assert rs.dominant_representative((1, 1)) == (1, 1)
    # lowest weight of the 3-dim module comes back to the dual weight
    assert rs.dominant_representative((-1, 0)) == (0, 1)


def test_type_validation():
    with pytest.raises(ValueError):
        RootSystemType("D", 3)
    with pytest.raises(ValueError):
        RootSystemType("E", 9)
    with pytest.raises(ValueError):
        RootSystemType("H", 4)
    with pytest.raises(ValueError):
        RootSystemType("F", 3)
    assert RootSystemType.parse("B3") == RootSystemType("B", 3)
    assert RootSystemType.parse("E8").name == "E8"
