from fractions import Fraction

import pytest

import rule150

alpha = rule150.QSqrt5.alpha()


def test_simulate_rows():
    rows = rule150.simulate(2)
    assert rows == [[0], [-1, 0, 1], [-2, 0, 2]]
    assert sum(len(r) for r in rule150.simulate(31)) == 416


def test_odd_rule_rejected():
    with pytest.raises(ValueError):
        rule150.simulate(3, rule=151)


def test_counts():
    assert [rule150.num(n) for n in range(8)] == [1, 3, 3, 5, 3, 9, 5, 11]
    assert rule150.cum(255) == 14080
    assert rule150.cum_pow2(64) == rule150.cum_pow2_closed(64).p
    big = 2**100 + 12345
    assert isinstance(rule150.num(big), int)


def test_exact_values():
    assert rule150.F("1/2") == alpha
    assert rule150.F(Fraction(3, 4)) == rule150.QSqrt5(7, -1, 8)
    third = rule150.F(Fraction(1, 3))
    assert (third.p, third.q, third.d) == (-3, 2, 11)
    assert third.decimal(6) == "0.133831"
    assert rule150.F_recursive("5/2^3") == rule150.F("5/8")
    assert rule150.F(1) == rule150.QSqrt5(1)


def test_fk_and_enclosure():
    assert rule150.F_k(Fraction(1, 2), 3) == Fraction(3, 10)
    lo, hi, depth = rule150.F_enclosure("random:5", "1e-9")
    assert lo <= hi and depth > 0
    assert float(hi - lo) <= 1e-9


def test_quotients():
    two_a = rule150.QSqrt5(2) * alpha
    q = rule150.right_quotient("1/2", 5)
    assert q == rule150.QSqrt5(3) * two_a * two_a * two_a * two_a
    assert float(rule150.left_quotient("1/2", 80)) > 1e6


def test_fractal():
    assert rule150.prefractal_pbm(1) == "P1\n3 2\n010\n111\n"
    assert abs(rule150.boxcount_slope(8, 24) - 1.694242) <= 0.01
    assert abs(rule150.dimension() - 1.6942419136) < 1e-9


def test_check_suite():
    passed, failed = rule150.check("counting")
    assert passed > 0 and failed == 0
