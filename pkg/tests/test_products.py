import pytest

from conftest import THETA_CORPUS

import _brute as brute
from qcore import (
    PochhammerFactor,
    QProductSpec,
    ThetaSpec,
    TruncatedSeries,
    chi,
    euler_f,
    expand_pochhammer,
    expand_qproduct,
    gen_a5bar,
    gen_b5bar,
    gen_c5,
    phi,
    psi,
    rr_quotient,
    theta_general,
    triple_product,
)

# frozen via _brute.py (qproduct / theta_sum / partition counts)
R_OF_Q_16 = [1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 2, -3, 2, 0, -2, 4, -4]
F_PLUS_Q_16 = [1, 1, -1, 0, 0, -1, 0, -1, 0, 0, 0, 0, -1, 0, 0, 1, 0]
CHI_MINUS_Q_8 = [1, -1, 0, -1, 1, -1, 1, -1, 2]
CHI_PLUS_Q_8 = [1, 1, 0, 1, 1, 1, 1, 1, 2]
DISTINCT_PARTS_8 = [1, 1, 1, 2, 2, 3, 4, 5, 6]
C5_16 = [1, 1, 2, 3, 5, 2, 6, 5, 7, 5, 12, 6, 12, 6, 10, 11, 16]
A5BAR_16 = [1, 2, 4, 8, 14, 14, 20, 24, 20, 14, 32, 24, 24, 48, 60, 32, 62]
B5BAR_16 = [1, 1, 1, 2, 3, -1, 0, 2, 0, -2, 6, 6, 3, 5, 8, 0, 0]


# -- Pochhammer products -------------------------------------------------------


def test_pochhammer_euler_product():
    assert expand_pochhammer(PochhammerFactor(1, 1, 1), 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_pochhammer_zero_exponent():
    assert expand_pochhammer(PochhammerFactor(1, 1, 2, 0), 5) == TruncatedSeries.one(5)


def test_pochhammer_distinct_parts():
    got = expand_pochhammer(PochhammerFactor(-1, 1, 1), 8)
    assert list(got.coeffs) == DISTINCT_PARTS_8


def test_pochhammer_negative_exponent_is_partition_gf():
    got = expand_pochhammer(PochhammerFactor(1, 1, 1, -1), 10)
    assert list(got.coeffs) == brute.partition_counts(10)


def test_pochhammer_square_matches_pow():
    single = expand_pochhammer(PochhammerFactor(1, 2, 3), 30)
    assert expand_pochhammer(PochhammerFactor(1, 2, 3, 2), 30) == single.pow(2)


def test_pochhammer_validation():
    with pytest.raises(ValueError):
        PochhammerFactor(2, 1, 1)
    with pytest.raises(ValueError):
        PochhammerFactor(1, 0, 1)


# -- Euler products --------------------------------------------------------------


def test_euler_f1_pentagonal():
    assert euler_f(1, 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_euler_f5_is_one_below_q5():
    assert euler_f(5, 4) == TruncatedSeries.one(4)


def test_euler_f2():
    assert euler_f(2, 6).coeffs == (1, 0, -1, 0, -1, 0, 0)


def test_euler_f_matches_pochhammer():
    for j in (1, 2, 5):
        assert euler_f(j, 150) == expand_pochhammer(PochhammerFactor(1, j, j), 150)


def test_euler_f_inflate_consistency():
    for j in (2, 3, 5):
        n = 90
        assert euler_f(j, n) == euler_f(1, n // j).inflate(j, n)


def test_euler_f_positive_argument():
    assert list(euler_f(1, 16, 1).coeffs) == F_PLUS_Q_16
    # f(q) = f2^3/(f1 f4) as a q-product
    prod = euler_f(2, 100).pow(3).div(euler_f(1, 100).mul(euler_f(4, 100)))
    assert euler_f(1, 100, 1) == prod


# -- general theta ----------------------------------------------------------------


def test_theta_phi_psi_f_specializations():
    assert theta_general(ThetaSpec(-1, 1, -1, 1), 9).coeffs == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2)
    assert theta_general(ThetaSpec(-1, 1, -1, 3), 10).coeffs == (1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1)
    assert theta_general(ThetaSpec(-1, 1, -1, 2), 60) == euler_f(1, 60)


def test_theta_matches_brute_window():
    for spec in THETA_CORPUS:
        got = theta_general(spec, 120)
        assert list(got.coeffs) == brute.theta_sum(spec.s1, spec.e1, spec.s2, spec.e2, 120), spec


def test_theta_spec_validation():
    with pytest.raises(ValueError):
        ThetaSpec(1, 0, 1, 0)
    with pytest.raises(ValueError):
        ThetaSpec(0, 1, 1, 1)


def test_triple_product_matches_bilateral_sum():
    for spec in THETA_CORPUS:
        assert triple_product(spec, 200) == theta_general(spec, 200), spec


# -- named specializations ----------------------------------------------------------


def test_phi_values():
    assert phi(-1, 1, 9).coeffs == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2)
    assert phi(1, 1, 4).coeffs == (1, 2, 0, 0, 2)
    assert phi(-1, 5, 20) == phi(-1, 1, 4).inflate(5)


def test_psi_values():
    assert psi(-1, 1, 10).coeffs == (1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1)
    assert psi(1, 1, 6).coeffs == (1, 1, 0, 1, 0, 0, 1)
    assert psi(-1, 5, 15).coeffs == (1,) + (0,) * 4 + (-1,) + (0,) * 9 + (-1,)


def test_phi_psi_euler_sum_vs_product_forms():
    for sign in (1, -1):
        for j in (1, 2):
            assert phi(sign, j, 300) == phi(sign, j, 300, form="product")
            assert psi(sign, j, 300) == psi(sign, j, 300, form="product")
    assert euler_f(1, 300) == expand_pochhammer(PochhammerFactor(1, 1, 1), 300)


def test_chi_values():
    assert chi(-1, 1, 4).coeffs == (1, -1, 0, -1, 1)
    assert chi(1, 1, 3).coeffs == (1, 1, 0, 1)
    assert list(chi(-1, 1, 8).coeffs) == CHI_MINUS_Q_8
    assert list(chi(1, 1, 8).coeffs) == CHI_PLUS_Q_8


def test_chi_product_pairing():
    n = 120
    assert chi(1, 1, n).mul(chi(-1, 1, n)) == chi(-1, 2, n)
    # chi(-q) = f1/f2
    assert chi(-1, 1, n) == euler_f(1, n).div(euler_f(2, n))


def test_rr_quotient_expansion():
    assert list(rr_quotient(1, 16).coeffs) == R_OF_Q_16


def test_rr_quotient_inverse_pairs():
    r = rr_quotient(1, 80)
    assert r.mul(r.invert()) == TruncatedSeries.one(80)
    assert r.invert().pow(4)[0] == 1


def test_rr_quotient_inflated():
    assert rr_quotient(5, 80) == rr_quotient(1, 16).inflate(5)


# -- generating functions --------------------------------------------------------


def test_gen_c5_matches_brute():
    assert list(gen_c5(16).coeffs) == C5_16


def test_gen_a5bar_matches_brute():
    assert list(gen_a5bar(16).coeffs) == A5BAR_16


def test_gen_b5bar_matches_brute():
    assert list(gen_b5bar(16).coeffs) == B5BAR_16


def test_generating_functions_unit_constant_terms():
    assert gen_c5(0).coeffs == (1,)
    assert gen_a5bar(0).coeffs == (1,)
    assert gen_b5bar(0).coeffs == (1,)


def test_gen_c5_strictly_positive():
    assert all(c >= 1 for c in gen_c5(2000).coeffs)


def test_a5bar_20n6_coefficient_divisible_by_ten():
    assert gen_a5bar(6)[6] == 20
    assert gen_a5bar(6)[6] % 10 == 0


def test_b5bar_zero_slots():
    series = gen_b5bar(200)
    assert all(series[10 * n + 6] == 0 for n in range(20))


def test_named_constructors_memoize():
    assert phi(-1, 1, 64) is phi(-1, 1, 64)
    assert gen_c5(64) is gen_c5(64)


def test_qproduct_expansion_matches_brute():
    spec = QProductSpec((
        PochhammerFactor(1, 1, 5),
        PochhammerFactor(1, 4, 5),
        PochhammerFactor(1, 2, 5, -1),
        PochhammerFactor(1, 3, 5, -1),
    ))
    got = expand_qproduct(spec, 40)
    num = brute.qproduct([(1, 1, 5, 1), (1, 4, 5, 1)], 40)
    den = brute.qproduct([(1, 2, 5, 1), (1, 3, 5, 1)], 40)
    assert list(got.coeffs) == brute.convolve(num, brute.invert(den, 40), 40)
