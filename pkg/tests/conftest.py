import sys
from fractions import Fraction

import sympy as sp
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cartanfree.exactpoly import Poly1, Poly2

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

T, S, X = sp.symbols("t s x")

small_ints = st.integers(min_value=-6, max_value=6)
fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
nonzero_fractions = fractions.filter(bool)


def poly1s(max_degree: int = 6):
    return st.dictionaries(st.integers(0, max_degree), fractions, max_size=max_degree + 1).map(Poly1.make)


def poly2s(max_degree: int = 4):
    keys = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree))
    return st.dictionaries(keys, fractions, max_size=8).map(Poly2.make)


def to_sympy(p) -> sp.Expr:
    """Independent rendering of a package polynomial as a sympy expression."""
    if isinstance(p, Poly1):
        return sum((sp.Rational(c.numerator, c.denominator) * T ** e for e, c in p.items()), sp.Integer(0))
    return sum((sp.Rational(c.numerator, c.denominator) * T ** i * S ** j for (i, j), c in p.items()),
               sp.Integer(0))


def from_sympy(expr: sp.Expr, two_vars: bool = False):
    expr = sp.expand(expr)
    if two_vars:
        poly = sp.Poly(expr, T, S)
        return Poly2.make({(i, j): Fraction(int(c.p), int(c.q)) for (i, j), c in poly.terms()})
    poly = sp.Poly(expr, T)
    return Poly1.make({e: Fraction(int(c.p), int(c.q)) for (e,), c in poly.terms()})


def rat(x: Fraction) -> sp.Rational:
    return sp.Rational(x.numerator, x.denominator)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if not acceptance or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        status, title, info = acceptance.RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title} ({info})")
