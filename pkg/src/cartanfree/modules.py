"""Module families on ``C[t]`` and ``C[t, s]`` as executable actions.

Four families are provided:

* ``omega_vir``  -- the Virasoro module on ``C[t]``,
  ``L_m f = lam^m (t - m alpha) f(t - m)``;
* ``omega_hv``   -- the same ``L_m`` plus ``I_m f = beta lam^m f(t - m)``;
* ``omega_w22``  -- the same ``L_m`` with every ``W_m`` acting as zero;
* ``omega_big``  -- the W(2,2)-module on ``C[t, s]`` with
  ``W_m f = lam^m (t - m alpha) f(t, s - m)`` and
  ``L_m f = lam^m (s + h_m(t)) f(t, s - m) - m lam^m (t - m alpha) d/dt f(t, s - m)``.

Central generators act by the charges of :class:`ParamSet`, which are zero for
all constructed modules.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import InvalidGenerator, InvalidParam
from .exactpoly import (
    ParamSet,
    Poly1,
    Poly2,
    ScalarLike,
    d_dt,
    format_scalar,
    geometric_quotient,
    scalar,
    shift_s,
    shift_t,
)
from .liealg import AlgebraKind, Generator, LieElement, is_valid

ModuleVec = Union[Poly1, Poly2]


class Family(enum.Enum):
    OMEGA_VIR = "omega_vir"
    OMEGA_HV = "omega_hv"
    OMEGA_W22 = "omega_w22"
    OMEGA_BIG = "omega_big"

    @property
    def algebra(self) -> AlgebraKind:
        return {
            Family.OMEGA_VIR: AlgebraKind.VIR,
            Family.OMEGA_HV: AlgebraKind.HVIR,
            Family.OMEGA_W22: AlgebraKind.W22,
            Family.OMEGA_BIG: AlgebraKind.W22,
        }[self]

    @property
    def carrier(self) -> type:
        return Poly2 if self is Family.OMEGA_BIG else Poly1


# --- the h-family ---------------------------------------------------------

def h_monomial(n: int, k: int, alpha: ScalarLike) -> Poly1:
    """``n t^k - n(n-1) alpha (t^k - alpha^k)/(t - alpha)``."""
    return _h_monomial(n, k, scalar(alpha))


@lru_cache(maxsize=4096)
def _h_monomial(n: int, k: int, alpha: Fraction) -> Poly1:
    if k < 0:
        raise InvalidParam("k must be non-negative")
    return Poly1.monomial(k, n) - geometric_quotient(k, alpha) * (n * (n - 1) * alpha)


@dataclass(frozen=True)
class HCoeffs:
    """A member of ``H_alpha``: ``h_n = sum_i xi_i h_{n,i;alpha}`` with ``xi`` fixed in ``n``."""

    alpha: Fraction
    xi: Tuple[Fraction, ...] = ()

    @classmethod
    def make(cls, alpha: ScalarLike, xi: Iterable[ScalarLike] = ()) -> "HCoeffs":
        return cls(scalar(alpha), tuple(scalar(x) for x in xi))

    def h(self, n: int) -> Poly1:
        return _h_sum(self.alpha, self.xi, n)


@lru_cache(maxsize=4096)
def _h_sum(alpha: Fraction, xi: Tuple[Fraction, ...], n: int) -> Poly1:
    out = Poly1()
    for i, x in enumerate(xi):
        if x:
            out = out + _h_monomial(n, i, alpha) * x
    return out


def h_n(h: HCoeffs, n: int) -> Poly1:
    return h.h(n)


def negative_control_h(n: int) -> Poly1:
    """``h_n = n^2 t``: a family outside every ``H_alpha``."""
    return Poly1.monomial(1, n * n)


# --- module specifications -----------------------------------------------

@dataclass(frozen=True)
class ModuleSpec:
    family: Family
    lam: Fraction
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    xi: Tuple[Fraction, ...] = ()
    negative_control: bool = False

    def __post_init__(self) -> None:
        if self.lam == 0:
            raise InvalidParam("lambda must be nonzero")
        if self.beta and self.family is not Family.OMEGA_HV:
            raise InvalidParam(f"beta only applies to omega_hv, not {self.family.value}")
        if self.xi and self.family is not Family.OMEGA_BIG:
            raise InvalidParam(f"xi only applies to omega_big, not {self.family.value}")
        if self.negative_control and self.family is not Family.OMEGA_BIG:
            raise InvalidParam("negative_control only applies to omega_big")

    @property
    def algebra(self) -> AlgebraKind:
        return self.family.algebra

    @property
    def carrier(self) -> type:
        return self.family.carrier

    @property
    def params(self) -> ParamSet:
        return ParamSet.constructed(self.lam, self.alpha, self.beta, self.xi)

    @property
    def hcoeffs(self) -> HCoeffs:
        return HCoeffs(self.alpha, self.xi)

    def h(self, n: int) -> Poly1:
        if self.negative_control:
            return negative_control_h(n)
        return _h_sum(self.alpha, self.xi, n)

    def one(self) -> ModuleVec:
        return self.carrier.const(1)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "family": self.family.value,
            "lambda": format_scalar(self.lam),
            "alpha": format_scalar(self.alpha),
        }
        if self.family is Family.OMEGA_HV:
            out["beta"] = format_scalar(self.beta)
        if self.family is Family.OMEGA_BIG:
            out["xi"] = [format_scalar(x) for x in self.xi]
            if self.negative_control:
                out["negative_control"] = True
        return out

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "ModuleSpec":
        known = {"family", "lambda", "alpha", "beta", "xi", "negative_control"}
        extra = set(obj) - known
        if extra:
            raise InvalidParam(f"unknown module spec field(s): {', '.join(sorted(extra))}")
        try:
            family = Family(obj["family"])
        except KeyError as exc:
            raise InvalidParam("module spec needs a 'family'") from exc
        except ValueError as exc:
            raise InvalidParam(f"unknown family {obj['family']!r}") from exc
        if "lambda" not in obj:
            raise InvalidParam("module spec needs 'lambda'")
        xi = obj.get("xi", [])
        if not isinstance(xi, list):
            raise InvalidParam("'xi' must be a list of scalars")
        neg = obj.get("negative_control", False)
        if not isinstance(neg, bool):
            raise InvalidParam("'negative_control' must be a boolean")
        try:
            return cls(family, _param(obj["lambda"]), _param(obj.get("alpha", "0")),
                       _param(obj.get("beta", "0")), tuple(_param(x) for x in xi), neg)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            if isinstance(exc, InvalidParam):
                raise
            raise InvalidParam(str(exc)) from exc

    def __str__(self) -> str:
        lam, al = format_scalar(self.lam), format_scalar(self.alpha)
        if self.family is Family.OMEGA_HV:
            return f"omega_hv({lam}, {al}, {format_scalar(self.beta)})"
        if self.family is Family.OMEGA_BIG:
            xi = ",".join(format_scalar(x) for x in self.xi)
            tag = "; h_n=n^2 t" if self.negative_control else ""
            return f"omega_big({lam}, {al}, xi=({xi}){tag})"
        return f"{self.family.value}({lam}, {al})"


def _param(x: Any) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise InvalidParam(f"scalar must be a string 'p/q' or an integer, got {x!r}")
    return scalar(x)


def omega_vir(lam: ScalarLike, alpha: ScalarLike = 0) -> ModuleSpec:
    return ModuleSpec(Family.OMEGA_VIR, scalar(lam), scalar(alpha))


def omega_hv(lam: ScalarLike, alpha: ScalarLike = 0, beta: ScalarLike = 0) -> ModuleSpec:
    return ModuleSpec(Family.OMEGA_HV, scalar(lam), scalar(alpha), scalar(beta))


def omega_w22(lam: ScalarLike, alpha: ScalarLike = 0) -> ModuleSpec:
    return ModuleSpec(Family.OMEGA_W22, scalar(lam), scalar(alpha))


def omega_big(lam: ScalarLike, alpha: ScalarLike = 0, xi: Sequence[ScalarLike] = (),
              negative_control: bool = False) -> ModuleSpec:
    return ModuleSpec(Family.OMEGA_BIG, scalar(lam), scalar(alpha), Fraction(0),
                      tuple(scalar(x) for x in xi), negative_control)


# --- actions ---------------------------------------------------------------

def _check(spec: ModuleSpec, g: Generator, v: ModuleVec) -> None:
    if not is_valid(spec.algebra, g):
        raise InvalidGenerator(f"{g} does not act on {spec.family.value}")
    if not isinstance(v, spec.carrier):
        raise TypeError(f"{spec.family.value} acts on {spec.carrier.__name__}, got {type(v).__name__}")


def _central_charge(spec: ModuleSpec, g: Generator) -> Fraction:
    return spec.params.c[int(g.kind[1])]


def act(spec: ModuleSpec, g: Generator, v: ModuleVec) -> ModuleVec:
    """Apply the generator ``g`` to the vector ``v``."""
    _check(spec, g, v)
    if g.is_central:
        return v * _central_charge(spec, g)
    m = g.index
    lm = spec.lam ** m
    if spec.family is Family.OMEGA_BIG:
        shifted = shift_s(v, m)
        weight = Poly2.make({(1, 0): lm, (0, 0): -m * spec.alpha * lm})
        if g.kind == "W":
            return weight * shifted
        mult = Poly2.from_poly1(spec.h(m)) * lm + Poly2.monomial(0, 1, lm)
        return mult * shifted - weight * d_dt(shifted) * m
    if g.kind == "L":
        return Poly1.make({1: lm, 0: -m * spec.alpha * lm}) * shift_t(v, m)
    if g.kind == "I":
        return shift_t(v, m) * (spec.beta * lm)
    return Poly1()  # W_m on omega_w22


def act_elem(spec: ModuleSpec, x: LieElement, v: ModuleVec) -> ModuleVec:
    out = spec.carrier()
    for g, c in x.terms.items():
        out = out + act(spec, g, v) * c
    return out


def act_word(spec: ModuleSpec, word: Sequence[Generator], v: ModuleVec) -> ModuleVec:
    """Apply ``word[0] word[1] ... word[-1]`` to ``v``; the last generator acts first."""
    if not isinstance(v, spec.carrier):
        raise TypeError(f"{spec.family.value} acts on {spec.carrier.__name__}, got {type(v).__name__}")
    for g in reversed(word):
        v = act(spec, g, v)
    return v


def act_poly_in(spec: ModuleSpec, g: Generator, f: Poly1, v: ModuleVec) -> ModuleVec:
    """Apply ``f(g)`` to ``v`` as the sum of ``c_e g^e v``."""
    out = spec.carrier()
    power = v
    for e in range(int(f.degree()) + 1 if f else 0):
        if e:
            power = act(spec, g, power)
        c = f.coeff(e)
        if c:
            out = out + power * c
    return out
