"""Root system construction: Cartan data, roots, orthogonal coordinates."""

from fractions import Fraction

import pytest

from roofcalc import (
    RootSystemError,
    Weight,
    build_root_system,
    from_orthogonal,
    is_positive_root,
    is_root,
    make_weight,
    pair,
    reflect,
    to_orthogonal,
)


def test_positive_root_counts():
    for n in range(1, 8):
        assert len(build_root_system("A", n).positive_roots) == n * (n + 1) // 2
    for n in range(2, 8):
        assert len(build_root_system("C", n).positive_roots) == n * n
    for n in range(3, 8):
        assert len(build_root_system("D", n).positive_roots) == n * (n - 1)
    assert len(build_root_system("F4", 4).positive_roots) == 24
    assert len(build_root_system("G2", 2).positive_roots) == 6


def test_cartan_matrices():
    f4 = build_root_system("F4", 4)
    assert f4.cartan == (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -2, 2, -1),
        (0, 0, -1, 2),
    )
    # nodes 1 and 2 are the long ones
    assert f4.symmetrizer == (2, 2, 1, 1)

    c4 = build_root_system("C", 4)
    assert c4.cartan == (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -1, 2, -2),
        (0, 0, -1, 2),
    )
    assert c4.symmetrizer == (1, 1, 1, 2)

    g2 = build_root_system("G2", 2)
    assert g2.cartan == ((2, -1), (-3, 2))
    assert g2.symmetrizer == (3, 1)

    d5 = build_root_system("D", 5)
    # node 5 hangs off node 3
    assert d5.cartan[4][3] == 0
    assert d5.cartan[3][4] == 0
    assert d5.cartan[4][2] == -1
    assert d5.cartan[2][4] == -1

    a3 = build_root_system("A", 3)
    assert a3.cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


def test_symmetrizer_symmetrizes():
    for label, rank in (("A", 4), ("C", 5), ("D", 5), ("F4", 4), ("G2", 2)):
        s = build_root_system(label, rank)
        for i in range(s.rank):
            for j in range(s.rank):
                assert s.symmetrizer[i] * s.cartan[i][j] == s.symmetrizer[j] * s.cartan[j][i]


def test_rho_is_all_ones():
    for label, rank in (("A", 3), ("C", 4), ("D", 4), ("F4", 4), ("G2", 2)):
        s = build_root_system(label, rank)
        assert s.rho == Weight((1,) * rank)


def test_rho_orthogonal_coordinates_type_c():
    # rho = (n, n-1, ..., 1) in the L basis, the convention the point
    # count formulas assume
    for n in (5, 8):
        s = build_root_system("C", n)
        assert to_orthogonal(s, s.rho) == tuple(Fraction(n - j) for j in range(n))


def test_orthogonal_round_trip():
    probes = ((2, 0, -1, 3, 1), (-2, 1, 0, 0, 5), (0, 0, 0, 0, 0))
    for label in ("A", "C", "D"):
        s = build_root_system(label, 5)
        for coords in probes:
            chi = make_weight(s, coords)
            assert from_orthogonal(s, to_orthogonal(s, chi)) == chi
        assert from_orthogonal(s, to_orthogonal(s, s.rho)) == s.rho


def test_orthogonal_spin_coordinates():
    d5 = build_root_system("D", 5)
    spin = make_weight(d5, (0, 0, 0, 0, 1))
    assert to_orthogonal(d5, spin) == (Fraction(1, 2),) * 5
    half = Fraction(1, 2)
    assert to_orthogonal(d5, make_weight(d5, (0, 0, 0, 1, 0))) == (
        half, half, half, half, -half,
    )


def test_orthogonal_rejects_non_lattice_vectors():
    c3 = build_root_system("C", 3)
    with pytest.raises(RootSystemError):
        from_orthogonal(c3, (Fraction(1, 2), 0, 0))
    d4 = build_root_system("D", 4)
    # a single half-integer coordinate is not in the D weight lattice
    with pytest.raises(RootSystemError):
        from_orthogonal(d4, (Fraction(1, 2), 0, 0, 0))


def test_orthogonal_unavailable_for_exceptional_types():
    for label, rank in (("F4", 4), ("G2", 2)):
        s = build_root_system(label, rank)
        with pytest.raises(RootSystemError):
            to_orthogonal(s, s.rho)
        with pytest.raises(RootSystemError):
            from_orthogonal(s, (0,) * rank)


def test_root_norms():
    f4 = build_root_system("F4", 4)
    assert {d.norm for d in f4.root_data} == {2, 4}
    assert sum(1 for d in f4.root_data if d.norm == 4) == 12
    g2 = build_root_system("G2", 2)
    assert {d.norm for d in g2.root_data} == {2, 6}
    a4 = build_root_system("A", 4)
    assert {d.norm for d in a4.root_data} == {2}
    c4 = build_root_system("C", 4)
    assert sum(1 for d in c4.root_data if d.norm == 4) == 4


def test_coroot_pairing_with_rho_is_height():
    for label, rank in (("C", 4), ("F4", 4), ("G2", 2)):
        s = build_root_system(label, rank)
        for d in s.root_data:
            # <rho, beta-vee> equals the height of the coroot, and is
            # always >= 1 with equality exactly on simple roots
            p = s.coroot_pairing(s.rho, d)
            assert p >= 1
            assert (p == 1) == (d.weight in s.simple_roots)


def test_build_validation():
    with pytest.raises(RootSystemError):
        build_root_system("B", 3)
    with pytest.raises(RootSystemError):
        build_root_system("A", 0)
    with pytest.raises(RootSystemError):
        build_root_system("D", 2)
    with pytest.raises(RootSystemError):
        build_root_system("F4", 5)
    with pytest.raises(RootSystemError):
        build_root_system("G2", 3)


def test_systems_are_interned():
    assert build_root_system("C", 3) is build_root_system("C", 3)
    assert build_root_system("f4", 4) is build_root_system("F4", 4)


def test_make_weight_validation():
    c3 = build_root_system("C", 3)
    with pytest.raises(RootSystemError):
        make_weight(c3, (1, 2))
    with pytest.raises(RootSystemError):
        Weight((1.5, 2))


def test_weight_arithmetic():
    a = Weight((1, -2, 3))
    b = Weight((0, 1, 1))
    assert a + b == Weight((1, -1, 4))
    assert a - b == Weight((1, -3, 2))
    assert -a == Weight((-1, 2, -3))
    assert 3 * a == Weight((3, -6, 9))
    assert a * 2 == Weight((2, -4, 6))
    assert hash(a) == hash((1, -2, 3))


def test_pair_and_reflect_on_fundamental_weights():
    for label, rank in (("A", 3), ("C", 3), ("F4", 4), ("G2", 2)):
        s = build_root_system(label, rank)
        for i in range(1, rank + 1):
            omega = Weight(tuple(1 if j == i else 0 for j in range(1, rank + 1)))
            for j in range(1, rank + 1):
                assert pair(s, omega, j) == (1 if i == j else 0)
            assert reflect(s, omega, i) == omega - s.simple_roots[i - 1]
        with pytest.raises(RootSystemError):
            pair(s, s.rho, 0)
        with pytest.raises(RootSystemError):
            reflect(s, s.rho, rank + 1)


def test_root_membership():
    g2 = build_root_system("G2", 2)
    highest = max(g2.root_data, key=lambda d: sum(d.coefficients)).weight
    assert is_positive_root(g2, highest)
    assert not is_positive_root(g2, -highest)
    assert is_root(g2, -highest)
    assert not is_root(g2, g2.rho + g2.rho)


def test_simple_roots_match_cartan_columns():
    for label, rank in (("A", 4), ("C", 4), ("D", 4), ("F4", 4), ("G2", 2)):
        s = build_root_system(label, rank)
        for j in range(rank):
            assert s.simple_roots[j] == Weight(s.cartan[i][j] for i in range(rank))
