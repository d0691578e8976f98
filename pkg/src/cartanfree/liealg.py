"""The Virasoro, Heisenberg-Virasoro and W(2,2) algebras given by structure constants."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .errors import InvalidGenerator
from .exactpoly import ScalarLike, format_scalar, scalar


class AlgebraKind(enum.Enum):
    VIR = "Vir"
    HVIR = "HVir"
    W22 = "W22"


INDEXED = ("L", "I", "W")
CENTRAL = ("C1", "C2", "C3")

_ALLOWED = {
    AlgebraKind.VIR: {"L", "C1"},
    AlgebraKind.HVIR: {"L", "I", "C1", "C2", "C3"},
    AlgebraKind.W22: {"L", "W", "C1", "C2"},
}

_ORDER = {"L": 0, "I": 1, "W": 2, "C1": 3, "C2": 4, "C3": 5}


@dataclass(frozen=True)
class Generator:
    """A basis symbol: ``L_m``, ``I_m``, ``W_m`` or a central ``C_j``."""

    kind: str
    index: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind in INDEXED:
            if not isinstance(self.index, int) or isinstance(self.index, bool):
                raise InvalidGenerator(f"{self.kind} needs an integer index")
        elif self.kind in CENTRAL:
            if self.index is not None:
                raise InvalidGenerator(f"central generator {self.kind} takes no index")
        else:
            raise InvalidGenerator(f"unknown generator kind {self.kind!r}")

    @property
    def is_central(self) -> bool:
        return self.kind in CENTRAL

    def sort_key(self) -> Tuple[int, int]:
        return (_ORDER[self.kind], self.index if self.index is not None else 0)

    def __lt__(self, other: "Generator") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.kind if self.index is None else f"{self.kind}_{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Generator":
        """Inverse of ``str``: ``"L_-2"``, ``"W_3"``, ``"C1"``."""
        text = text.strip()
        if text in CENTRAL:
            return cls(text)
        kind, sep, idx = text.partition("_")
        if not sep:
            raise InvalidGenerator(f"cannot parse generator {text!r}")
        try:
            return cls(kind, int(idx))
        except ValueError as exc:
            raise InvalidGenerator(f"cannot parse generator {text!r}") from exc


def L(m: int) -> Generator:
    return Generator("L", m)


def I(m: int) -> Generator:  # noqa: E743
    return Generator("I", m)


def W(m: int) -> Generator:
    return Generator("W", m)


C1 = Generator("C1")
C2 = Generator("C2")
C3 = Generator("C3")


def is_valid(kind: AlgebraKind, g: Generator) -> bool:
    return g.kind in _ALLOWED[kind]


def require_valid(kind: AlgebraKind, g: Generator) -> None:
    if not is_valid(kind, g):
        raise InvalidGenerator(f"{g} is not a basis element of {kind.value}")


def basis(kind: AlgebraKind, max_index: int, *, central: bool = True) -> List[Generator]:
    """All basis elements with ``|index| <= max_index``, in canonical order."""
    out = [Generator(k, m) for k in INDEXED if k in _ALLOWED[kind]
           for m in range(-max_index, max_index + 1)]
    if central:
        out += [Generator(k) for k in CENTRAL if k in _ALLOWED[kind]]
    return out


@dataclass(frozen=True, eq=False)
class LieElement:
    """Finite linear combination of generators with exact coefficients."""

    terms: Mapping[Generator, Fraction] = field(default_factory=dict)

    @classmethod
    def make(cls, terms: Union[Mapping[Generator, ScalarLike],
                               Iterable[Tuple[Generator, ScalarLike]]]) -> "LieElement":
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: Dict[Generator, Fraction] = {}
        for g, c in items:
            c = scalar(c)
            if c:
                v = out.get(g, 0) + c
                if v:
                    out[g] = v
                else:
                    out.pop(g)
        return cls(out)

    @classmethod
    def of(cls, g: Generator, c: ScalarLike = 1) -> "LieElement":
        return cls.make({g: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[Generator, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))

    def coeff(self, g: Generator) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement.make(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "LieElement":
        return LieElement({g: -c for g, c in self.terms.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, c: ScalarLike) -> "LieElement":
        c = scalar(c)
        if not c:
            return LieElement()
        return LieElement({g: v * c for g, v in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for g, c in self.items():
            coef = format_scalar(c)
            parts.append(str(g) if c == 1 else f"{coef}*{g}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LieElement({self})"


def _delta(m: int, n: int) -> int:
    return 1 if m + n == 0 else 0


def bracket(kind: AlgebraKind, x: Generator, y: Generator) -> LieElement:
    """``[x, y]`` from the defining relations of ``kind``."""
    require_valid(kind, x)
    require_valid(kind, y)
    if x.is_central or y.is_central:
        return LieElement()
    a, m = x.kind, x.index
    b, n = y.kind, y.index
    terms: List[Tuple[Generator, Fraction]] = []

    if a == "L" and b == "L":
        terms.append((L(m + n), Fraction(n - m)))
        if _delta(m, n):
            terms.append((C1, Fraction(m ** 3 - m, 12)))
    elif a == "L" and b == "I":
        terms.append((I(m + n), Fraction(n)))
        if _delta(m, n):
            terms.append((C2, Fraction(m * m + m)))
    elif a == "I" and b == "I":
        if _delta(m, n):
            terms.append((C3, Fraction(m)))
    elif a == "L" and b == "W":
        terms.append((W(m + n), Fraction(n - m)))
        if _delta(m, n):
            terms.append((C2, Fraction(m ** 3 - m, 12)))
    elif a == "W" and b == "W":
        pass
    elif a in ("I", "W") and b == "L":
        return -bracket(kind, y, x)
    else:  # pragma: no cover - excluded by require_valid
        raise InvalidGenerator(f"no relation for [{x}, {y}] in {kind.value}")
    return LieElement.make(terms)


def bracket_elem(kind: AlgebraKind, x: LieElement, y: LieElement) -> LieElement:
    """Bilinear extension of :func:`bracket`."""
    acc: Dict[Generator, Fraction] = {}
    for g, c in x.terms.items():
        for h, d in y.terms.items():
            for k, e in bracket(kind, g, h).terms.items():
                acc[k] = acc.get(k, 0) + c * d * e
    return LieElement.make(acc)


def jacobi_defect(kind: AlgebraKind, x: Generator, y: Generator, z: Generator) -> LieElement:
    """``[x,[y,z]] + [y,[z,x]] + [z,[x,y]]``; zero in a Lie algebra."""
    X, Y, Z = LieElement.of(x), LieElement.of(y), LieElement.of(z)
    return (bracket_elem(kind, X, bracket_elem(kind, Y, Z))
            + bracket_elem(kind, Y, bracket_elem(kind, Z, X))
            + bracket_elem(kind, Z, bracket_elem(kind, X, Y)))
