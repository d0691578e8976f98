import json
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from cartanfree.errors import InvalidGenerator, InvalidParam
from cartanfree.exactpoly import Poly1, Poly2
from cartanfree.liealg import I, L, LieElement, W, basis
from cartanfree.modules import (
    Family,
    HCoeffs,
    ModuleSpec,
    act,
    act_elem,
    act_poly_in,
    act_word,
    h_monomial,
    h_n,
    negative_control_h,
    omega_big,
    omega_hv,
    omega_vir,
    omega_w22,
)
from cartanfree.operators import operator_of

from conftest import S, T, fractions, nonzero_fractions, poly1s, poly2s, rat, small_ints, to_sympy

t = Poly1.var()
pt, ps = Poly2.t(), Poly2.s()


class TestHFamily:
    def test_examples(self):
        assert h_monomial(2, 1, 1) == 2 * t - 2
        assert h_monomial(5, 0, Fraction(3, 7)) == Poly1.const(5)
        assert h_monomial(3, 2, 0) == 3 * t * t
        assert h_n(HCoeffs.make(0, (1, 1)), 2) == 2 + 2 * t
        assert h_n(HCoeffs.make(1, (0, 0, 0)), 4) == Poly1()

    @given(st.integers(0, 6), fractions)
    def test_h0_vanishes(self, k, alpha):
        assert h_monomial(0, k, alpha) == Poly1()

    @given(small_ints, st.integers(0, 6), fractions)
    def test_against_sympy_division(self, n, k, alpha):
        a = rat(alpha)
        expected = n * T ** k - n * (n - 1) * a * sp.cancel((T ** k - a ** k) / (T - a))
        assert to_sympy(h_monomial(n, k, alpha)) == sp.expand(expected)

    def test_negative_control_is_not_linear_in_n(self):
        assert negative_control_h(3) == 9 * t


def _oracle_action(spec, g, f):
    """Formula-level rendering of the four families in sympy."""
    lam, al = rat(spec.lam), rat(spec.alpha)
    e = to_sympy(f)
    if g.is_central:
        return sp.Integer(0)
    m = g.index
    if spec.family is Family.OMEGA_BIG:
        shifted = e.subs(S, S - m)
        weight = lam ** m * (T - m * al)
        if g.kind == "W":
            return sp.expand(weight * shifted)
        hm = to_sympy(spec.h(m))
        return sp.expand(lam ** m * (S + hm) * shifted - m * weight * sp.diff(shifted, T))
    if g.kind == "L":
        return sp.expand(lam ** m * (T - m * al) * e.subs(T, T - m))
    if g.kind == "I":
        return sp.expand(rat(spec.beta) * lam ** m * e.subs(T, T - m))
    return sp.Integer(0)


SPECS = [
    omega_vir(2, 1),
    omega_hv(Fraction(3, 2), Fraction(1, 3), 5),
    omega_w22(-1, -2),
    omega_big(2, 1, (2, -1, Fraction(1, 2))),
    omega_big(Fraction(3, 2), 0, (0, 1)),
]


class TestAct:
    def test_examples(self):
        hv = omega_hv(2, 1, 3)
        assert act(hv, L(1), Poly1.const(1)) == 2 * t - 2
        assert act(hv, I(1), t) == 6 * t - 6
        assert act(hv, I(0), t * t) == 3 * t * t
        assert act(omega_big(1, 0, (0, 1)), L(1), Poly2.const(1)) == ps + pt
        assert act(omega_w22(3, 2), W(4), t ** 3) == Poly1()

    @pytest.mark.parametrize("spec", SPECS, ids=str)
    def test_against_sympy(self, spec):
        vecs = ([Poly2.monomial(i, j) for i in range(3) for j in range(3)] if spec.carrier is Poly2
                else [Poly1.monomial(e) for e in range(4)])
        for g in basis(spec.algebra, 3, central=False):
            for v in vecs:
                assert to_sympy(act(spec, g, v)) == _oracle_action(spec, g, v), (g, v)

    @given(st.sampled_from(SPECS), small_ints, fractions, fractions, st.data())
    def test_linearity(self, spec, m, a, b, data):
        strat = poly2s(3) if spec.carrier is Poly2 else poly1s(5)
        f, g = data.draw(strat), data.draw(strat)
        for gen in (L(m), W(m) if spec.algebra.value == "W22" else L(-m)):
            assert act(spec, gen, f * a + g * b) == act(spec, gen, f) * a + act(spec, gen, g) * b

    @given(nonzero_fractions, fractions, nonzero_fractions, st.integers(-6, 6).filter(bool), poly1s(10))
    def test_degree_laws_poly1(self, lam, alpha, beta, m, f):
        if not f:
            return
        spec = omega_hv(lam, alpha, beta)
        assert act(spec, L(m), f).degree() == f.degree() + 1
        assert act(spec, I(m), f).degree() == f.degree()
        assert act(omega_vir(lam, alpha), L(m), f).degree() == f.degree() + 1

    @given(nonzero_fractions, fractions, st.lists(fractions, max_size=4), small_ints, poly2s(3))
    def test_degree_laws_big(self, lam, alpha, xi, m, f):
        if not f:
            return
        spec = omega_big(lam, alpha, xi)
        assert act(spec, W(m), f).deg_t() == f.deg_t() + 1
        hdeg = spec.h(m).degree()
        assert act(spec, L(m), f).degree() <= f.degree() + max(1, hdeg)

    @given(nonzero_fractions, fractions, st.lists(fractions, max_size=4), poly2s(4))
    def test_big_cartan_part_is_multiplication(self, lam, alpha, xi, f):
        spec = omega_big(lam, alpha, xi)
        assert spec.h(0) == Poly1()
        assert act(spec, L(0), f) == ps * f
        assert act(spec, W(0), f) == pt * f

    @pytest.mark.parametrize("spec", SPECS, ids=str)
    def test_central_generators_act_by_zero(self, spec):
        one = spec.one()
        for c in basis(spec.algebra, 0):
            if c.is_central:
                assert not act(spec, c, one)

    def test_invalid_generator(self):
        with pytest.raises(InvalidGenerator):
            act(omega_w22(1), I(1), Poly1.const(1))
        with pytest.raises(InvalidGenerator):
            act(omega_hv(1), W(1), Poly1.const(1))
        with pytest.raises(TypeError):
            act(omega_big(1), L(1), Poly1.const(1))

    def test_vir_and_hv_with_zero_beta_agree(self):
        for m in range(-4, 5):
            for e in range(4):
                v = Poly1.monomial(e)
                assert act(omega_vir(2, 1), L(m), v) == act(omega_hv(2, 1, 0), L(m), v)


class TestWords:
    def test_examples(self):
        spec = omega_hv(1, 0, 0)
        one = Poly1.const(1)
        a = act_word(spec, [L(1), L(-1)], one)
        b = act_word(spec, [L(-1), L(1)], one)
        assert a == t * (t - 1) and b == t * (t + 1)
        assert a - b == act_elem(spec, LieElement.make({L(0): -2}), one)
        assert act_word(spec, [], t) == t
        assert act_word(omega_big(1), [W(0), W(0)], Poly2.const(1)) == pt * pt

    def test_poly_in_generator(self):
        spec = omega_big(2, 1, (1,))
        u = ps + 1
        assert act_poly_in(spec, W(0), t ** 2 - 3, u) == (pt * pt - 3) * u


class TestOperators:
    @pytest.mark.parametrize("spec", SPECS + [omega_big(1, 1, (), negative_control=True)], ids=str)
    def test_normal_form_agrees_with_act(self, spec):
        vecs = ([Poly2.monomial(i, j) for i in range(4) for j in range(4)] if spec.carrier is Poly2
                else [Poly1.monomial(e) for e in range(6)])
        for g in basis(spec.algebra, 4):
            op = operator_of(spec, g)
            for v in vecs:
                assert op.apply(v) == act(spec, g, v)

    def test_composition_matches_sequential_application(self):
        spec = omega_big(2, 1, (1, 2))
        for m, n in [(1, -1), (2, 3), (-2, 0)]:
            comp = operator_of(spec, L(m)) @ operator_of(spec, W(n))
            for v in [Poly2.monomial(2, 1), pt + ps * ps]:
                assert comp.apply(v) == act(spec, L(m), act(spec, W(n), v))


class TestSpecJson:
    def test_round_trip(self):
        for spec in SPECS:
            assert ModuleSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec

    def test_schema_example(self):
        spec = ModuleSpec.from_json({"family": "omega_hv", "lambda": "2", "alpha": "1", "beta": "3"})
        assert spec == omega_hv(2, 1, 3)
        big = ModuleSpec.from_json({"family": "omega_big", "lambda": "1/2", "alpha": "0", "xi": ["0", "1"]})
        assert big.xi == (0, 1) and big.lam == Fraction(1, 2)

    @pytest.mark.parametrize("obj", [
        {"family": "omega_hv", "lambda": "0"},
        {"family": "omega_nope", "lambda": "1"},
        {"family": "omega_vir"},
        {"family": "omega_vir", "lambda": "1", "beta": "2"},
        {"family": "omega_vir", "lambda": "1", "xi": ["1"]},
        {"family": "omega_vir", "lambda": "1", "gamma": "1"},
        {"family": "omega_vir", "lambda": 1.5},
        {"family": "omega_vir", "lambda": "1/0"},
    ])
    def test_rejects(self, obj):
        with pytest.raises(InvalidParam):
            ModuleSpec.from_json(obj)
