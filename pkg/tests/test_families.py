"""Closed-form hypergeometric families against the Euclidean oracle."""

from fractions import Fraction

import pytest

from sturmion import families, grids
from sturmion.chain import build_chain, sturmian_pair
from sturmion.poly import Polynomial
from sturmion.spectral import jacobi_from_chain, mirror_dual


def oracle(spec):
    chain = build_chain(*sturmian_pair(grids.characteristic_polynomial(spec)))
    return jacobi_from_chain(chain)


def family_arrays(fam, n_max):
    b, u = [], []
    for n in range(n_max + 1):
        bn, un = fam.recurrence(n)
        b.append(bn)
        if n >= 1:
            u.append(un)
    return tuple(b), tuple(u)


def test_pochhammer():
    assert families.poch(Fraction(3), 4) == 3 * 4 * 5 * 6
    assert families.poch(Fraction(-2), 3) == 0
    assert families.poch(Fraction(1, 2), 2) == Fraction(3, 4)
    assert families.poch(Fraction(5), 0) == 1


def test_q_pochhammer():
    q = Fraction(1, 2)
    assert families.qpoch(Fraction(1, 2), q, 2) == Fraction(1, 2) * Fraction(3, 4)
    assert families.qpoch(Fraction(1), q, 3) == 0
    assert families.qpoch(Fraction(3), q, 0) == 1


def test_hahn_anchor_coefficients():
    fam = families.Hahn(Fraction(-3), Fraction(-3), 2)
    b, u = family_arrays(fam, 2)
    assert b == (Fraction(1), Fraction(1), Fraction(1))
    assert u == (Fraction(1, 3), Fraction(2, 3))


def test_hahn_mirror_parameter_map():
    # the mirror of Hahn(alpha, beta) is Hahn(-N-1-beta, -N-1-alpha)
    for n_max in range(1, 8):
        direct = oracle(grids.linear(n_max))
        zero = families.Hahn(Fraction(0), Fraction(0), n_max)
        b, u = family_arrays(zero, n_max)
        dual = mirror_dual(direct)
        assert dual.b == b
        assert dual.u == u


def test_hahn_weights_anchor():
    fam = families.Hahn(Fraction(-3), Fraction(-3), 2)
    sd = fam.weights()
    assert sd.weights == (Fraction(1, 6), Fraction(2, 3), Fraction(1, 6))


def test_hahn_values_satisfy_recurrence():
    fam = families.Hahn(Fraction(1, 2), Fraction(2), 5)
    for s in range(6):
        x = fam.node(s)
        for n in range(1, 5):
            b, u = fam.recurrence(n)
            lhs = fam.value(n + 1, s) + u * fam.value(n - 1, s)
            rhs = (x - b) * fam.value(n, s)
            assert lhs == rhs


def test_hahn_value_anchor():
    fam = families.Hahn(Fraction(-3), Fraction(-3), 2)
    assert fam.value(1, 0) == -1  # P_1(x) = x - 1 at x = 0


def test_racah_anchor_coefficients():
    fam = families.Racah(Fraction(-5, 2), Fraction(1, 2), Fraction(-1, 2), 2)
    b, u = family_arrays(fam, 2)
    assert b == (Fraction(12, 7), Fraction(76, 21), Fraction(8, 3))
    assert u == (Fraction(108, 49), Fraction(56, 9))


def test_racah_matches_oracle_both_sides():
    for n_max in range(1, 8):
        jm = oracle(grids.quadratic(Fraction(1), n_max))
        half = Fraction(1, 2)
        sturm = families.Racah(-n_max - half, half, -half, n_max)
        assert family_arrays(sturm, n_max) == (jm.b, jm.u)
        dual = families.Racah(n_max + half, -half, half, n_max)
        assert family_arrays(dual, n_max) == \
            (mirror_dual(jm).b, mirror_dual(jm).u)


def test_racah_mirror_parameter_map():
    # mirror sends (beta, gamma, delta) to (-beta, delta, gamma)
    fam = families.Racah(Fraction(-5, 2), Fraction(1, 2), Fraction(-1, 2), 2)
    mirrored = families.Racah(Fraction(5, 2), Fraction(-1, 2), Fraction(1, 2), 2)
    jm = jacobi_from_chain(build_chain(*sturmian_pair(
        grids.characteristic_polynomial(grids.quadratic(Fraction(1), 2)))))
    assert family_arrays(fam, 2) == (jm.b, jm.u)
    assert family_arrays(mirrored, 2) == \
        (mirror_dual(jm).b, mirror_dual(jm).u)


def test_racah_nodes_and_mass():
    fam = families.Racah(Fraction(5, 2), Fraction(-1, 2), Fraction(1, 2), 2)
    assert [fam.node(s) for s in range(3)] == [0, 2, 6]


def test_racah_values_satisfy_recurrence():
    fam = families.Racah(Fraction(7, 2), Fraction(-1, 2), Fraction(1, 2), 3)
    for s in range(4):
        x = fam.node(s)
        for n in range(1, 3):
            b, u = fam.recurrence(n)
            lhs = fam.value(n + 1, s) + u * fam.value(n - 1, s)
            rhs = (x - b) * fam.value(n, s)
            assert lhs == rhs


def test_qhahn_anchor_coefficients():
    fam = families.QHahn(Fraction(4), Fraction(4), Fraction(1, 2), 1)
    b, u = family_arrays(fam, 1)
    assert b == (Fraction(4, 3), Fraction(5, 3))
    assert u == (Fraction(2, 9),)


def test_qhahn_nodes():
    fam = families.QHahn(Fraction(1), Fraction(1), Fraction(1, 2), 2)
    assert [fam.node(s) for s in range(3)] == [1, 2, 4]


def test_qhahn_weights_sum_to_one():
    fam = families.QHahn(Fraction(1), Fraction(1), Fraction(2, 3), 3)
    sd = fam.weights()
    assert sum(sd.weights) == 1
    assert all(w > 0 for w in sd.weights)


def test_qhahn_values_satisfy_recurrence():
    fam = families.QHahn(Fraction(8), Fraction(8), Fraction(1, 2), 2)
    for s in range(3):
        x = fam.node(s)
        for n in range(1, 2):
            b, u = fam.recurrence(n)
            lhs = fam.value(n + 1, s) + u * fam.value(n - 1, s)
            rhs = (x - b) * fam.value(n, s)
            assert lhs == rhs


def test_chebyshev_recurrences_build_known_polys():
    t = families.ChebyshevT()
    u = families.ChebyshevU()
    x = Polynomial.x()
    pt = [Polynomial.constant(Fraction(1)), x]
    pu = [Polynomial.constant(Fraction(1)), x]
    for n in range(1, 6):
        _, ut = t.recurrence(n)
        _, uu = u.recurrence(n)
        pt.append(x * pt[n] - ut * pt[n - 1])
        pu.append(x * pu[n] - uu * pu[n - 1])
    assert pt[3] == grids.monic_t(3)
    assert pu[3] == grids.monic_u(3)
    assert pt[5] == grids.monic_t(5)
    assert pu[5] == grids.monic_u(5)


def test_chebyshev_derivative_relations():
    # T'_{n+1} = (n+1) U_n and U'_{n+1} = (n+1) C_n^(2), monic-normalized
    c2 = families.Ultraspherical(Fraction(2))
    x = Polynomial.x()
    pc = [Polynomial.constant(Fraction(1)), x]
    for n in range(1, 20):
        _, uc = c2.recurrence(n)
        pc.append(x * pc[n] - uc * pc[n - 1])
    for n in range(0, 19):
        lhs = grids.monic_t(n + 1).derivative()
        assert lhs == Fraction(n + 1) * grids.monic_u(n)
        lhs = grids.monic_u(n + 1).derivative()
        assert lhs == Fraction(n + 1) * pc[n]


def test_ultraspherical_values_match_recurrence_polys():
    lam = Fraction(3, 2)
    fam = families.Ultraspherical(lam)
    x = Polynomial.x()
    pc = [Polynomial.constant(Fraction(1)), x]
    for n in range(1, 6):
        _, uc = fam.recurrence(n)
        pc.append(x * pc[n] - uc * pc[n - 1])
    for n in range(6):
        for xv in (Fraction(0), Fraction(1, 3), Fraction(-2, 5)):
            assert fam.value(n, xv) == pc[n](xv)


def test_denominator_zero_reported_with_index():
    with pytest.raises(families.FamilyError):
        fam = families.Hahn(Fraction(-1), Fraction(0), 2)
        family_arrays(fam, 2)


def test_racah_case_two_limit():
    # gamma + delta = 0 keeps the node law s(s + 1) for any gamma
    fam = families.Racah(Fraction(9, 2), Fraction(1), Fraction(-1), 2)
    assert [fam.node(s) for s in range(3)] == [0, 2, 6]
