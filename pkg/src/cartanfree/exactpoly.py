"""Exact rational scalars and sparse polynomials in ``t`` and ``(t, s)``.

Scalars are :class:`fractions.Fraction` values.  Polynomials are immutable
maps from exponents to nonzero coefficients; the zero polynomial has no
terms and degree :data:`NEG_INF`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

#: Degree of the zero polynomial.  ``NEG_INF + k == NEG_INF`` and it compares
#: below every integer, so degree arithmetic needs no special cases.
NEG_INF = float("-inf")

Degree = Union[int, float]


def scalar(x: ScalarLike) -> Fraction:
    """Coerce ``x`` to an exact scalar.  Strings may be ``"p/q"`` or ``"p"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        if not text:
            raise ValueError("empty scalar string")
        return Fraction(text)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def format_scalar(x: Fraction) -> str:
    """Canonical text form: ``"p"`` or ``"p/q"`` in lowest terms."""
    return str(Fraction(x))


def sample_scalars(rng: random.Random, count: int = 5, *, nonzero: bool = False,
                   bound: int = 7) -> list[Fraction]:
    """Draw ``count`` distinct small rationals from a seeded generator.

    Used wherever a polynomial identity in the parameters is certified by
    evaluation at several rational points.
    """
    out: list[Fraction] = []
    while len(out) < count:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if nonzero and x == 0:
            continue
        if x not in out:
            out.append(x)
    return out


def _clean(coeffs: Iterable[Tuple[object, ScalarLike]]) -> Dict:
    out: Dict = {}
    for e, c in coeffs:
        c = scalar(c)
        if c:
            out[e] = out.get(e, 0) + c
            if not out[e]:
                del out[e]
    return out


def _fmt_term(c: Fraction, mono: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if not mono:
        body = format_scalar(a)
    elif a == 1:
        body = mono
    else:
        body = f"{format_scalar(a)}*{mono}"
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


def _pow(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


@dataclass(frozen=True, eq=False)
class Poly1:
    """Polynomial in a single variable, ``t`` unless stated otherwise."""

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for e, c in self.coeffs.items():
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad exponent {e!r}")
            if not isinstance(c, Fraction) or c == 0:
                raise ValueError("coefficients must be nonzero Fractions; use Poly1.make")

    @classmethod
    def make(cls, coeffs: Union[Mapping[int, ScalarLike], Iterable[Tuple[int, ScalarLike]]]) -> "Poly1":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        return cls(_clean(items))

    @classmethod
    def from_list(cls, coeffs: Sequence[ScalarLike]) -> "Poly1":
        """Build from ascending coefficients ``[c0, c1, ...]``."""
        return cls.make(enumerate(coeffs))

    @classmethod
    def const(cls, c: ScalarLike) -> "Poly1":
        return cls.make({0: c})

    @classmethod
    def var(cls) -> "Poly1":
        return cls({1: Fraction(1)})

    @classmethod
    def monomial(cls, e: int, c: ScalarLike = 1) -> "Poly1":
        return cls.make({e: c})

    # --- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self) -> Degree:
        return max(self.coeffs) if self.coeffs else NEG_INF

    def lead(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[max(self.coeffs)] if self.coeffs else Fraction(0)

    def coeff(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def __call__(self, x: ScalarLike) -> Fraction:
        x = scalar(x)
        acc = Fraction(0)
        if not self.coeffs:
            return acc
        for e in range(max(self.coeffs), -1, -1):
            acc = acc * x + self.coeffs.get(e, 0)
        return acc

    # --- ring operations -----------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly1.const(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash(("Poly1", frozenset(self.coeffs.items())))

    def __neg__(self) -> "Poly1":
        return Poly1({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other: Union["Poly1", int, Fraction]) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            other = Poly1.const(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly1(out)

    __radd__ = __add__

    def __sub__(self, other: Union["Poly1", int, Fraction]) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            other = Poly1.const(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union[int, Fraction]) -> "Poly1":
        return (-self) + other

    def __mul__(self, other: Union["Poly1", int, Fraction]) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly1()
            return Poly1({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, Poly1):
            return NotImplemented
        out: Dict[int, Fraction] = {}
        for a, c in self.coeffs.items():
            for b, d in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + c * d
        return Poly1({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly1":
        if k < 0:
            raise ValueError("negative power")
        out = Poly1.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: ScalarLike) -> "Poly1":
        return self * scalar(c)

    def __truediv__(self, c: ScalarLike) -> "Poly1":
        c = scalar(c)
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return Poly1({e: v / c for e, v in self.coeffs.items()})

    def shift(self, m: int) -> "Poly1":
        return shift_t(self, m)

    def derivative(self) -> "Poly1":
        return d_dt(self)

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = [_fmt_term(c, _pow(var, e), i == 0)
                 for i, (e, c) in enumerate(sorted(self.coeffs.items(), reverse=True))]
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly1({self.to_str()})"


@dataclass(frozen=True, eq=False)
class Poly2:
    """Polynomial in ``t`` and ``s``; keys are exponent pairs ``(i, j)`` for ``t^i s^j``."""

    coeffs: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0:
                raise ValueError(f"bad exponent {(i, j)!r}")
            if not isinstance(c, Fraction) or c == 0:
                raise ValueError("coefficients must be nonzero Fractions; use Poly2.make")

    @classmethod
    def make(cls, coeffs: Union[Mapping[Tuple[int, int], ScalarLike],
                                Iterable[Tuple[Tuple[int, int], ScalarLike]]]) -> "Poly2":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        return cls(_clean(items))

    @classmethod
    def const(cls, c: ScalarLike) -> "Poly2":
        return cls.make({(0, 0): c})

    @classmethod
    def t(cls) -> "Poly2":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def s(cls) -> "Poly2":
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def monomial(cls, i: int, j: int, c: ScalarLike = 1) -> "Poly2":
        return cls.make({(i, j): c})

    @classmethod
    def from_poly1(cls, p: Poly1, var: str = "t") -> "Poly2":
        if var == "t":
            return cls({(e, 0): c for e, c in p.coeffs.items()})
        if var == "s":
            return cls({(0, e): c for e, c in p.coeffs.items()})
        raise ValueError(f"unknown variable {var!r}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def deg_t(self) -> Degree:
        return max((i for i, _ in self.coeffs), default=NEG_INF)

    def deg_s(self) -> Degree:
        return max((j for _, j in self.coeffs), default=NEG_INF)

    def degree(self) -> Degree:
        """Total degree."""
        return max((i + j for i, j in self.coeffs), default=NEG_INF)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def items(self) -> Iterator[Tuple[Tuple[int, int], Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def min_t_exponent(self) -> Degree:
        """Largest ``i`` with ``t^i`` dividing the polynomial (``inf`` for zero)."""
        return min((i for i, _ in self.coeffs), default=float("inf"))

    def coeff_in_s(self, i: int) -> Poly1:
        """The ``t^i`` slice as a polynomial in ``s``."""
        return Poly1({j: c for (a, j), c in self.coeffs.items() if a == i})

    def truncate_t(self, max_t: int) -> "Poly2":
        """Drop every term whose ``t``-exponent exceeds ``max_t``."""
        return Poly2({k: c for k, c in self.coeffs.items() if k[0] <= max_t})

    def as_poly1(self, var: str = "t") -> Poly1:
        """Reinterpret a one-variable ``Poly2`` as :class:`Poly1`."""
        idx, other = (0, 1) if var == "t" else (1, 0)
        if any(k[other] for k in self.coeffs):
            raise ValueError(f"polynomial is not free of the other variable: {self}")
        return Poly1({k[idx]: c for k, c in self.coeffs.items()})

    def __call__(self, t: ScalarLike, s: ScalarLike) -> Fraction:
        t, s = scalar(t), scalar(s)
        return sum((c * t ** i * s ** j for (i, j), c in self.coeffs.items()), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash(("Poly2", frozenset(self.coeffs.items())))

    def __neg__(self) -> "Poly2":
        return Poly2({k: -c for k, c in self.coeffs.items()})

    def __add__(self, other: Union["Poly2", int, Fraction]) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Poly2(out)

    __radd__ = __add__

    def __sub__(self, other: Union["Poly2", int, Fraction]) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union[int, Fraction]) -> "Poly2":
        return (-self) + other

    def __mul__(self, other: Union["Poly2", int, Fraction]) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly2()
            return Poly2({k: c * other for k, c in self.coeffs.items()})
        if not isinstance(other, Poly2):
            return NotImplemented
        out: Dict[Tuple[int, int], Fraction] = {}
        for (a, b), c in self.coeffs.items():
            for (d, e), f in other.coeffs.items():
                k = (a + d, b + e)
                out[k] = out.get(k, 0) + c * f
        return Poly2({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly2":
        if k < 0:
            raise ValueError("negative power")
        out = Poly2.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: ScalarLike) -> "Poly2":
        return self * scalar(c)

    def __truediv__(self, c: ScalarLike) -> "Poly2":
        c = scalar(c)
        if c == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return Poly2({k: v / c for k, v in self.coeffs.items()})

    def shift(self, m: int) -> "Poly2":
        return shift_s(self, m)

    def derivative(self) -> "Poly2":
        return d_dt(self)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
        parts = []
        for n, ((i, j), c) in enumerate(terms):
            mono = "*".join(x for x in (_pow("t", i), _pow("s", j)) if x)
            parts.append(_fmt_term(c, mono, n == 0))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly2({self})"


Poly = Union[Poly1, Poly2]


def _shift_powers(j: int, m: int) -> list[Fraction]:
    """Coefficients of ``(x - m)^j`` in ascending order."""
    return [Fraction(comb(j, r) * (-m) ** (j - r)) for r in range(j + 1)]


def shift_t(f: Poly1, m: int) -> Poly1:
    """Return ``f(t - m)``."""
    if m == 0 or not f.coeffs:
        return f
    out: Dict[int, Fraction] = {}
    for e, c in f.coeffs.items():
        for r, b in enumerate(_shift_powers(e, m)):
            out[r] = out.get(r, 0) + c * b
    return Poly1({e: c for e, c in out.items() if c})


def shift_s(f: Poly2, m: int) -> Poly2:
    """Return ``f(t, s - m)``."""
    if m == 0 or not f.coeffs:
        return f
    out: Dict[Tuple[int, int], Fraction] = {}
    for (i, j), c in f.coeffs.items():
        for r, b in enumerate(_shift_powers(j, m)):
            out[(i, r)] = out.get((i, r), 0) + c * b
    return Poly2({k: c for k, c in out.items() if c})


def d_dt(f: Poly) -> Poly:
    """Formal partial derivative in ``t``."""
    if isinstance(f, Poly1):
        return Poly1({e - 1: c * e for e, c in f.coeffs.items() if e})
    if isinstance(f, Poly2):
        return Poly2({(i - 1, j): c * i for (i, j), c in f.coeffs.items() if i})
    raise TypeError(f"not a polynomial: {f!r}")


def geometric_quotient(k: int, alpha: ScalarLike) -> Poly1:
    """``(t^k - alpha^k) / (t - alpha)`` as the finite sum ``sum_j alpha^j t^(k-1-j)``.

    ``k = 0`` gives the empty sum, i.e. the zero polynomial.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    alpha = scalar(alpha)
    return Poly1.make((k - 1 - j, alpha ** j) for j in range(k))


@dataclass(frozen=True)
class ParamSet:
    """Numeric parameters shared by a module and the proof computations.

    ``c`` holds the actions of ``I_0, C_1, C_2, C_3`` in that order.
    """

    lam: Fraction
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    xi: Tuple[Fraction, ...] = ()
    c: Tuple[Fraction, Fraction, Fraction, Fraction] = (Fraction(0),) * 4

    def __post_init__(self) -> None:
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")
        if len(self.c) != 4:
            raise ValueError("c must hold four central values c_0..c_3")

    @classmethod
    def constructed(cls, lam: ScalarLike, alpha: ScalarLike = 0, beta: ScalarLike = 0,
                    xi: Sequence[ScalarLike] = ()) -> "ParamSet":
        """Parameters of a constructed module: ``c_0 = beta`` and ``c_1 = c_2 = c_3 = 0``."""
        beta = scalar(beta)
        zero = Fraction(0)
        return cls(scalar(lam), scalar(alpha), beta, tuple(scalar(x) for x in xi),
                   (beta, zero, zero, zero))


def random_poly1(rng: random.Random, degree: int, bound: int = 7) -> Poly1:
    """Seeded polynomial of exact degree ``degree`` with small rational coefficients."""
    coeffs = {e: Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for e in range(degree)}
    coeffs[degree] = sample_scalars(rng, 1, nonzero=True, bound=bound)[0]
    return Poly1.make(coeffs)


def random_poly2(rng: random.Random, degree: int, bound: int = 7) -> Poly2:
    """Seeded polynomial in ``t, s`` of total degree ``degree``."""
    coeffs = {(i, d - i): Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
              for d in range(degree) for i in range(d + 1)}
    i = rng.randint(0, degree)
    coeffs[(i, degree - i)] = sample_scalars(rng, 1, nonzero=True, bound=bound)[0]
    return Poly2.make(coeffs)
