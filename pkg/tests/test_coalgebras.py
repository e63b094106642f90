from fractions import Fraction

import pytest

from comodules import GF, QQ, ZZ, Matrix, Zmod
from comodules.coalgebras import (Algebra, Coalgebra, check_algebra,
                                  check_coalgebra, check_coalgebra_morphism,
                                  direct_sum_coalgebras, dual_algebra,
                                  grouplike_coalgebra, matrix_coalgebra)


def test_grouplike_is_a_coalgebra():
    c = grouplike_coalgebra(QQ, 3)
    report = check_coalgebra(c)
    assert report.ok


def test_matrix_coalgebra_is_a_coalgebra():
    for ring in (QQ, GF(3), ZZ, Zmod(4)):
        c = matrix_coalgebra(ring, 2)
        assert check_coalgebra(c).ok


def test_broken_coassociativity_is_caught_with_witness():
    # tweak one structure constant of a grouplike coalgebra
    c = grouplike_coalgebra(QQ, 2)
    rows = [list(r) for r in c.delta.rows]
    rows[0][1] = Fraction(1)  # Delta(c_1) picks up c_0 (x) c_0
    bad = Coalgebra(QQ, 2, Matrix(QQ, rows, 2), c.epsilon)
    report = check_coalgebra(bad)
    assert not report.ok
    failed = report.failed_laws()
    assert "coassociativity" in failed or "left counit" in failed
    witness = [ch for ch in report.checks if not ch.ok][0]
    assert witness.column is not None and witness.defect is not None


def test_dual_algebra_of_matrix_coalgebra_multiplies_like_matrices():
    c = matrix_coalgebra(QQ, 2)
    a = dual_algebra(c)
    assert check_algebra(a).ok
    # dual basis f_ij dual to e_ij multiplies as f_ij f_kl = [j == k] f_il
    def unit_vec(i, j):
        v = [Fraction(0)] * 4
        v[i * 2 + j] = Fraction(1)
        return v

    prod = a.multiply(unit_vec(0, 1), unit_vec(1, 0))
    assert list(prod) == unit_vec(0, 0)
    prod = a.multiply(unit_vec(0, 1), unit_vec(0, 1))
    assert list(prod) == [Fraction(0)] * 4


def test_dual_of_grouplike_is_diagonal_algebra():
    a = dual_algebra(grouplike_coalgebra(Zmod(6), 2))
    assert check_algebra(a).ok
    assert a.multiply([1, 0], [1, 0]) == (1, 0)
    assert a.multiply([1, 0], [0, 1]) == (0, 0)
    # unit is the sum of the dual basis (epsilon transposed)
    assert a.unit == Matrix(Zmod(6), [[1], [1]], 1)


def test_coalgebra_morphism_check():
    c2 = grouplike_coalgebra(QQ, 2)
    c1 = grouplike_coalgebra(QQ, 1)
    # collapse both grouplikes onto the single one
    f = Matrix(QQ, [[1, 1]], 2)
    assert check_coalgebra_morphism(f, c2, c1).ok
    # scaling a grouplike breaks comultiplicativity
    g = Matrix(QQ, [[2, 1]], 2)
    report = check_coalgebra_morphism(g, c2, c1)
    assert not report.ok and "comultiplicativity" in report.failed_laws()


def test_direct_sum_coalgebra():
    c = direct_sum_coalgebras(grouplike_coalgebra(QQ, 1), matrix_coalgebra(QQ, 2))
    assert c.dim == 5
    assert check_coalgebra(c).ok


def test_shape_validation():
    with pytest.raises(ValueError):
        Coalgebra(QQ, 2, Matrix.zeros(QQ, 3, 2), Matrix.zeros(QQ, 1, 2))
