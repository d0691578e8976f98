import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from cartanfree.exactpoly import (
    NEG_INF,
    ParamSet,
    Poly1,
    Poly2,
    d_dt,
    format_scalar,
    geometric_quotient,
    random_poly1,
    random_poly2,
    sample_scalars,
    scalar,
    shift_s,
    shift_t,
)

from conftest import S, T, fractions, poly1s, poly2s, rat, small_ints, to_sympy

t = Poly1.var()
pt, ps = Poly2.t(), Poly2.s()


class TestScalar:
    def test_parsing(self):
        assert scalar("3/6") == Fraction(1, 2)
        assert scalar(" -4 ") == -4
        assert scalar(7) == Fraction(7)

    @pytest.mark.parametrize("bad", [True, 1.5, "", None])
    def test_rejects(self, bad):
        with pytest.raises((TypeError, ValueError)):
            scalar(bad)

    def test_canonical_form(self):
        x = scalar("-10/4")
        assert (x.numerator, x.denominator) == (-5, 2)
        assert format_scalar(x) == "-5/2"
        assert format_scalar(Fraction(6, 3)) == "2"

    def test_sampling_is_seeded(self):
        a = sample_scalars(random.Random(5), 5, nonzero=True)
        assert a == sample_scalars(random.Random(5), 5, nonzero=True)
        assert len(set(a)) == 5 and all(a)


class TestPoly1:
    def test_zero(self):
        z = Poly1()
        assert z.degree() == NEG_INF
        assert not z and z.is_zero()
        assert (t - t).coeffs == {}

    def test_no_stored_zeros(self):
        assert Poly1.make({0: 0, 3: 2, 5: Fraction(0)}).coeffs == {3: 2}

    def test_str(self):
        assert str(t * t - 2 * t + 1) == "t^2 - 2*t + 1"
        assert str(Poly1.make({1: Fraction(-1, 2)})) == "-1/2*t"
        assert Poly1.make({1: 4, 0: -8}).to_str("W0") == "4*W0 - 8"

    def test_evaluation(self):
        assert (t ** 3 - t)(Fraction(1, 2)) == Fraction(-3, 8)

    def test_random_degree_is_exact(self):
        rng = random.Random(1)
        for d in range(6):
            assert random_poly1(rng, d).degree() == d
            assert random_poly2(rng, d).degree() == d


class TestShift:
    @pytest.mark.parametrize("f, m, expected", [
        (t * t, 1, t * t - 2 * t + 1),
        (t, -2, t + 2),
        (t ** 3 - 5, 0, t ** 3 - 5),
    ])
    def test_shift_t_examples(self, f, m, expected):
        assert shift_t(f, m) == expected

    @pytest.mark.parametrize("f, m, expected", [
        (ps * ps, 1, ps * ps - 2 * ps + 1),
        (pt * ps, -1, pt * (ps + 1)),
        (pt ** 3, 7, pt ** 3),
    ])
    def test_shift_s_examples(self, f, m, expected):
        assert shift_s(f, m) == expected

    @given(poly1s(), small_ints)
    def test_shift_t_matches_sympy(self, f, m):
        assert to_sympy(shift_t(f, m)) == sp.expand(to_sympy(f).subs(T, T - m))

    @given(poly2s(), small_ints)
    def test_shift_s_matches_sympy(self, f, m):
        got = shift_s(f, m)
        assert to_sympy(got) == sp.expand(to_sympy(f).subs(S, S - m))
        assert got.deg_t() == f.deg_t() and got.deg_s() == f.deg_s()

    @given(poly1s(), poly1s(), small_ints, small_ints)
    def test_shift_is_ring_map_and_additive_in_m(self, f, g, m, n):
        assert shift_t(f * g, m) == shift_t(f, m) * shift_t(g, m)
        assert shift_t(shift_t(f, m), n) == shift_t(f, m + n)
        assert shift_t(f, m).degree() == f.degree()


class TestDerivative:
    def test_examples(self):
        assert d_dt(t ** 3) == 3 * t * t
        assert d_dt(Poly1.const(9)) == Poly1()
        assert d_dt(pt * ps * ps) == ps * ps

    @given(poly1s(), poly1s())
    def test_leibniz_poly1(self, f, g):
        assert d_dt(f * g) == d_dt(f) * g + f * d_dt(g)

    @given(poly2s(), poly2s())
    def test_leibniz_poly2(self, f, g):
        assert d_dt(f * g) == d_dt(f) * g + f * d_dt(g)

    @given(poly2s())
    def test_matches_sympy(self, f):
        assert to_sympy(d_dt(f)) == sp.diff(to_sympy(f), T)


class TestRingLaws:
    @given(poly1s(), poly1s(), poly1s())
    def test_poly1(self, f, g, h):
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == Poly1()

    @given(poly2s(), poly2s(), poly2s())
    def test_poly2(self, f, g, h):
        assert f * g == g * f
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)

    @given(poly1s(), poly1s())
    def test_product_matches_sympy(self, f, g):
        assert to_sympy(f * g) == sp.expand(to_sympy(f) * to_sympy(g))

    @given(poly2s(), poly2s())
    def test_degrees(self, f, g):
        if f and g:
            assert (f * g).degree() == f.degree() + g.degree()
            assert (f * g).deg_t() == f.deg_t() + g.deg_t()
            assert (f * g).deg_s() == f.deg_s() + g.deg_s()
        else:
            assert (f * g).degree() == NEG_INF


class TestGeometricQuotient:
    @pytest.mark.parametrize("k, alpha, expected", [
        (0, Fraction(5), Poly1()),
        (3, Fraction(1), t * t + t + 1),
        (2, Fraction(2), t + 2),
    ])
    def test_examples(self, k, alpha, expected):
        assert geometric_quotient(k, alpha) == expected

    @given(st.integers(0, 12), fractions)
    def test_times_linear_factor(self, k, alpha):
        lhs = (t - alpha) * geometric_quotient(k, alpha)
        assert lhs == Poly1.monomial(k) - Poly1.const(alpha ** k)

    @given(st.integers(1, 8), fractions)
    def test_sympy_division(self, k, alpha):
        a = rat(alpha)
        q = sp.cancel((T ** k - a ** k) / (T - a))
        assert to_sympy(geometric_quotient(k, alpha)) == sp.expand(q)


class TestParamSet:
    def test_constructed_charges(self):
        p = ParamSet.constructed(2, 1, 3)
        assert p.c == (3, 0, 0, 0)

    def test_zero_lambda(self):
        with pytest.raises(ValueError):
            ParamSet(Fraction(0))
