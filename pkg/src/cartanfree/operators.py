"""Normal forms for the generator actions as differential-shift operators.

On ``C[t]`` every action is ``sum_k c_k(t) T^k`` with ``(T^k f)(t) = f(t - k)``.
On ``C[t, s]`` it is ``sum_{a,k} c_{a,k}(t, s) D^a T^k`` with ``D = d/dt`` and
``(T^k f)(t, s) = f(t, s - k)``; ``D`` and ``T`` commute.  Composition uses

    T^k c = c(shifted by k) T^k,        D^a c = sum_r C(a, r) (D^r c) D^(a-r),

so an operator identity checked on normal forms holds on every polynomial,
which is what the axiom checks rely on.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Mapping, Tuple, Union

from .exactpoly import Poly1, Poly2, d_dt, shift_s, shift_t
from .liealg import Generator, LieElement
from .modules import Family, ModuleSpec, ModuleVec, _check, _central_charge

Coeff = Union[Poly1, Poly2]
Key = Tuple[int, int]  # (derivative order, shift)


class ShiftDiffOp:
    """Immutable operator in normal form; ``terms`` maps ``(a, k)`` to a coefficient."""

    __slots__ = ("carrier", "terms")

    def __init__(self, carrier: type, terms: Mapping[Key, Coeff] | None = None):
        self.carrier = carrier
        self.terms: Dict[Key, Coeff] = {k: c for k, c in (terms or {}).items() if c}
        if carrier is Poly1 and any(a for a, _ in self.terms):
            raise ValueError("operators on C[t] carry no derivative part")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShiftDiffOp):
            return NotImplemented
        return self.carrier is other.carrier and self.terms == other.terms

    def __add__(self, other: "ShiftDiffOp") -> "ShiftDiffOp":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return ShiftDiffOp(self.carrier, out)

    def __neg__(self) -> "ShiftDiffOp":
        return ShiftDiffOp(self.carrier, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ShiftDiffOp") -> "ShiftDiffOp":
        return self + (-other)

    def scale(self, c: Fraction) -> "ShiftDiffOp":
        return ShiftDiffOp(self.carrier, {k: v * c for k, v in self.terms.items()})

    def __matmul__(self, other: "ShiftDiffOp") -> "ShiftDiffOp":
        """Composition ``self o other`` (``other`` acts first)."""
        out: Dict[Key, Coeff] = {}

        def put(key: Key, c: Coeff) -> None:
            out[key] = out[key] + c if key in out else c

        if self.carrier is Poly1:
            for (_, k), c in self.terms.items():
                for (_, l), d in other.terms.items():
                    put((0, k + l), c * shift_t(d, k))
            return ShiftDiffOp(Poly1, out)
        for (a, k), c in self.terms.items():
            for (b, l), d in other.terms.items():
                dk = shift_s(d, k)
                for r in range(a + 1):
                    if r:
                        dk = d_dt(dk)
                    if dk:
                        put((a - r + b, k + l), c * dk * comb(a, r))
        return ShiftDiffOp(Poly2, out)

    def apply(self, v: ModuleVec) -> ModuleVec:
        out = self.carrier()
        for (a, k), c in self.terms.items():
            if self.carrier is Poly1:
                out = out + c * shift_t(v, k)
            else:
                w = shift_s(v, k)
                for _ in range(a):
                    w = d_dt(w)
                out = out + c * w
        return out

    def __repr__(self) -> str:
        body = ", ".join(f"D^{a}T^{k}: {c}" for (a, k), c in sorted(self.terms.items()))
        return f"ShiftDiffOp({body})"


def operator_of(spec: ModuleSpec, g: Generator) -> ShiftDiffOp:
    """Normal form of the action of ``g``; agrees with :func:`modules.act` on every vector."""
    carrier = spec.carrier
    _check(spec, g, carrier())
    if g.is_central:
        return ShiftDiffOp(carrier, {(0, 0): carrier.const(_central_charge(spec, g))})
    m = g.index
    lm = spec.lam ** m
    if spec.family is Family.OMEGA_BIG:
        weight = Poly2.make({(1, 0): lm, (0, 0): -m * spec.alpha * lm})
        if g.kind == "W":
            return ShiftDiffOp(Poly2, {(0, m): weight})
        mult = Poly2.from_poly1(spec.h(m)) * lm + Poly2.monomial(0, 1, lm)
        return ShiftDiffOp(Poly2, {(0, m): mult, (1, m): weight * (-m)})
    if g.kind == "L":
        return ShiftDiffOp(Poly1, {(0, m): Poly1.make({1: lm, 0: -m * spec.alpha * lm})})
    if g.kind == "I":
        return ShiftDiffOp(Poly1, {(0, m): Poly1.const(spec.beta * lm)})
    return ShiftDiffOp(Poly1)


def operator_of_elem(spec: ModuleSpec, x: LieElement) -> ShiftDiffOp:
    out = ShiftDiffOp(spec.carrier)
    for g, c in x.terms.items():
        out = out + operator_of(spec, g).scale(c)
    return out
