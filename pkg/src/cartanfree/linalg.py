"""Exact Gaussian elimination over the rationals.

Two interfaces: dense :func:`rref` / :func:`nullspace` for the small linear
systems of the classification proofs, and :class:`SpanState`, an incrementally
grown sparse reduced-echelon basis used by the submodule closure search.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

Vector = Dict[Hashable, Fraction]


def rref(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form and pivot columns of a dense matrix."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> List[List[Fraction]]:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


class SpanState:
    """Sparse basis in reduced echelon form; the span only grows.

    Each stored row has a pivot coordinate with coefficient 1 that no other
    row contains.  ``order`` ranks coordinates; the pivot of a new row is its
    largest coordinate under that order.
    """

    def __init__(self, order: Callable[[Hashable], object] = lambda k: k):
        self._order = order
        self.rows: Dict[Hashable, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[Hashable, Fraction]) -> Vector:
        """Remainder of ``vec`` after eliminating every pivot coordinate."""
        out = {k: Fraction(c) for k, c in vec.items() if c}
        for p, row in self.rows.items():
            c = out.get(p)
            if c:
                for k, v in row.items():
                    w = out.get(k, 0) - c * v
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
        return out

    def contains(self, vec: Mapping[Hashable, Fraction]) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: Mapping[Hashable, Fraction]) -> bool:
        """Add ``vec`` to the span; return whether the span grew."""
        rem = self.reduce(vec)
        if not rem:
            return False
        p = max(rem, key=self._order)
        inv = 1 / rem[p]
        rem = {k: c * inv for k, c in rem.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for k, v in rem.items():
                    w = row.get(k, 0) - c * v
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
        self.rows[p] = rem
        return True

    def pivots(self) -> List[Hashable]:
        return sorted(self.rows, key=self._order)

    def basis(self) -> List[Vector]:
        return [dict(self.rows[p]) for p in self.pivots()]

    def extend(self, vecs: Iterable[Mapping[Hashable, Fraction]]) -> int:
        return sum(self.insert(v) for v in vecs)


def solve_affine(equations: Sequence[Tuple[Mapping[Hashable, Fraction], Fraction]],
                 variables: Sequence[Hashable]) -> Tuple[Optional[Dict[Hashable, Fraction]],
                                                         List[Dict[Hashable, Fraction]]]:
    """Solve ``sum_v coeff[v] * x_v = rhs`` for every ``(coeff, rhs)``.

    Returns a particular solution (free variables set to 0), or ``None`` when
    the system is inconsistent, together with a basis of the homogeneous
    solutions.
    """
    index = {v: i for i, v in enumerate(variables)}
    n = len(variables)
    rows = []
    for coeffs, rhs in equations:
        row = [Fraction(0)] * (n + 1)
        for v, c in coeffs.items():
            row[index[v]] += c
        row[n] = Fraction(rhs)
        rows.append(row)
    if not rows:
        null = [{v: Fraction(int(v == w)) for v in variables} for w in variables]
        return {v: Fraction(0) for v in variables}, null
    reduced, pivots = rref(rows)
    if n in pivots:
        return None, []
    particular = {v: Fraction(0) for v in variables}
    for row, p in zip(reduced, pivots):
        particular[variables[p]] = row[n]
    null = []
    for vec in nullspace([r[:n] for r in rows], n):
        null.append({v: vec[i] for i, v in enumerate(variables)})
    return particular, null
