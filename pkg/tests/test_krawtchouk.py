from fractions import Fraction
from math import comb

import pytest

from cpsigma.krawtchouk import (
    KrawtchoukQuery,
    kraw_recurrence,
    kraw_sum,
    kraw_symbolic,
)
from cpsigma.polynomials import ONE_PLUS_XY
from cpsigma.rational import RF_ONE, RF_X, RF_Y, BiRationalFn

P13 = Fraction(1, 3)


class TestSum:
    def test_value_one_at_zero_argument(self):
        for n in range(1, 6):
            for j in range(n + 1):
                assert kraw_sum(j, 0, n, P13) == 1

    def test_degree_zero_is_one(self):
        for k in range(5):
            assert kraw_sum(0, k, 4, P13) == 1

    def test_k11_closed_form(self):
        # direct two-term oracle: K_1(1; p, 1) = 1 - 1/p
        for p in (P13, Fraction(2, 5), Fraction(9, 11)):
            assert kraw_sum(1, 1, 1, p) == 1 - 1 / p

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            kraw_sum(3, 0, 2, P13)
        with pytest.raises(ValueError):
            kraw_sum(0, 0, 2, Fraction(3, 2))

    def test_self_duality(self):
        for n in range(1, 9):
            for j in range(n + 1):
                for k in range(n + 1):
                    assert kraw_sum(j, k, n, P13) == kraw_sum(k, j, n, P13)

    def test_orthogonality_relation(self):
        # independent consistency check of the evaluator
        for n in (3, 8):
            for p in (P13, Fraction(5, 7)):
                for m in range(n + 1):
                    for l in range(n + 1):
                        total = sum(
                            Fraction(comb(n, k))
                            * p ** k
                            * (1 - p) ** (n - k)
                            * kraw_sum(m, k, n, p)
                            * kraw_sum(l, k, n, p)
                            for k in range(n + 1)
                        )
                        if m == l:
                            assert total == ((1 - p) / p) ** l / comb(n, l)
                        else:
                            assert total == 0


class TestRecurrence:
    def test_base_case(self):
        assert kraw_recurrence(0, 3, 5, P13) == 1

    def test_degree_one(self):
        # two-term sum oracle: K_1(k) = 1 - k/(N p)
        for k in range(6):
            assert kraw_recurrence(1, k, 5, P13) == 1 - Fraction(k) / (5 * P13)

    def test_matches_sum_everywhere(self):
        for n in range(1, 9):
            for p in (P13, Fraction(7, 8)):
                for j in range(n + 1):
                    for k in range(n + 1):
                        assert kraw_recurrence(j, k, n, p) == kraw_sum(j, k, n, p)


class TestSymbolic:
    def test_degree_zero(self):
        for k in range(4):
            assert kraw_symbolic(0, k, 3) == RF_ONE

    def test_k11_substitution(self):
        # 1 - (1+xy)/(xy) = -1/(xy)
        assert kraw_symbolic(1, 1, 1) == -RF_ONE / (RF_X * RF_Y)

    def test_denominator_divides_xy_power(self):
        for n in range(1, 5):
            for j in range(n + 1):
                for k in range(n + 1):
                    den = kraw_symbolic(j, k, n).den
                    assert all(i == jj for (i, jj) in den.terms)  # pure (xy)^m
                    assert len(den.terms) == 1

    def test_agrees_with_rational_evaluation(self):
        # substitute u = xy at a rational point, p = u/(1+u)
        u = Fraction(4, 7)
        p = u / (1 + u)
        for n in range(1, 6):
            for j in range(n + 1):
                for k in range(n + 1):
                    sym = kraw_symbolic(j, k, n)
                    num = _eval_rational(sym.num, u)
                    den = _eval_rational(sym.den, u)
                    assert num / den == kraw_sum(j, k, n, p)


def _eval_rational(poly, u: Fraction) -> Fraction:
    # the symbolic values depend on the point only through xy, so every
    # term is diagonal and (xy)^i evaluates to u^i
    total = Fraction(0)
    for (i, j), c in poly.terms.items():
        assert i == j
        total += c.real_fraction() * u ** i
    return total


class TestQuery:
    def test_validation(self):
        with pytest.raises(ValueError):
            KrawtchoukQuery(j=0, k=0, n=0)
        with pytest.raises(ValueError):
            KrawtchoukQuery(j=1, k=1, n=2, p=Fraction(1))

    def test_dispatch(self):
        assert KrawtchoukQuery(1, 1, 1, P13).evaluate() == -2
        assert KrawtchoukQuery(1, 1, 1).evaluate() == kraw_symbolic(1, 1, 1)
