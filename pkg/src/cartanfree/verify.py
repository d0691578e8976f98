"""Verification engine: module axioms, operator identities and submodule structure.

Every check returns a :class:`CheckReport`.  A failing identity is a report
outcome with a concrete counterexample, never an exception; exceptions are
reserved for calls outside an operation's preconditions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, InvalidParam, PreconditionViolated
from .exactpoly import (
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
from .liealg import AlgebraKind, Generator, L, LieElement, W, basis, bracket, jacobi_defect
from .linalg import SpanState
from .modules import (
    Family,
    ModuleSpec,
    ModuleVec,
    act,
    act_elem,
    act_poly_in,
    act_word,
    h_monomial,
    omega_w22,
)
from .operators import ShiftDiffOp, operator_of, operator_of_elem

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

DEFAULT_M_MAX = 6
DEFAULT_DEGREE_CAP = 8
DEFAULT_STEP_BUDGET = 10_000


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_scalar(x)
    if isinstance(x, (Poly1, Poly2, Generator, LieElement)):
        return str(x)
    if isinstance(x, ModuleSpec):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float):
        # degree of the zero polynomial
        return None if x == float("-inf") else x
    return x


@dataclass
class CheckReport:
    """Outcome of one check.  ``status == "fail"`` exactly when a counterexample is present."""

    check: str
    spec: Optional[ModuleSpec]
    status: str
    assertions: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    ranges: Optional[Dict[str, int]] = None
    inputs: Dict[str, Any] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in (PASS, FAIL, INCONCLUSIVE):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == FAIL) != (self.counterexample is not None):
            raise ValueError("status is 'fail' iff a counterexample is present")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "spec": self.spec.to_json() if self.spec is not None else None,
            "status": self.status,
            "counterexample": _jsonable(self.counterexample),
            "assertions": self.assertions,
            "ranges": self.ranges,
            "inputs": _jsonable(self.inputs),
            "details": _jsonable(self.details),
        }

    def key(self) -> str:
        """Stable sort key: check name, then spec and inputs in canonical JSON."""
        spec = self.spec.to_json() if self.spec is not None else None
        return json.dumps([self.check, spec, _jsonable(self.inputs)], sort_keys=True)

    def summary_line(self) -> str:
        where = f" {self.spec}" if self.spec is not None else ""
        args = ", ".join(f"{k}={v}" for k, v in sorted(_jsonable(self.inputs).items()))
        args = f" [{args}]" if args else ""
        return f"{self.status.upper():12s} {self.check}{where}{args} ({self.assertions} assertions)"


def _counterexample(**kw: Any) -> Dict[str, Any]:
    return {k: _jsonable(v) for k, v in kw.items()}


def _result(check: str, spec: Optional[ModuleSpec], assertions: int,
            cex: Optional[Dict[str, Any]], **extra: Any) -> CheckReport:
    return CheckReport(check, spec, FAIL if cex else PASS, assertions, cex, **extra)


def monomials(carrier: type, degree_cap: int, min_t: int = 0) -> List[ModuleVec]:
    """Monomial basis up to ``degree_cap`` (total degree), lowest degree first."""
    if carrier is Poly1:
        return [Poly1.monomial(e) for e in range(min_t, degree_cap + 1)]
    return [Poly2.monomial(i, d - i) for d in range(degree_cap + 1)
            for i in range(d, -1, -1) if i >= min_t]


# --- module axioms -----------------------------------------------------------

def check_module_axioms(spec: ModuleSpec, m_max: int = DEFAULT_M_MAX,
                        degree_cap: int = DEFAULT_DEGREE_CAP,
                        method: str = "operator") -> CheckReport:
    """Check ``x(y v) - y(x v) = [x, y] v`` for all generator pairs and basis monomials.

    ``method="direct"`` evaluates both sides on each monomial.  ``"operator"``
    (default) compares normal forms of ``x o y - y o x - [x, y]``; a zero normal
    form settles every monomial at once, and a nonzero one is evaluated on the
    monomials to produce the counterexample.
    """
    if method not in ("operator", "direct"):
        raise InvalidParam(f"unknown method {method!r}")
    if m_max < 1 or degree_cap < 0:
        raise InvalidParam("m_max must be positive and degree_cap non-negative")
    gens = basis(spec.algebra, m_max)
    monos = monomials(spec.carrier, degree_cap)
    ops: Dict[Generator, ShiftDiffOp] = {}

    def op(g: Generator) -> ShiftDiffOp:
        if g not in ops:
            ops[g] = operator_of(spec, g)
        return ops[g]

    def elem_op(x: LieElement) -> ShiftDiffOp:
        out = ShiftDiffOp(spec.carrier)
        for g, c in x.terms.items():
            out = out + op(g).scale(c)
        return out

    assertions = 0
    cex = None
    pairs = list(combinations(gens, 2))
    for x, y in pairs:
        br = bracket(spec.algebra, x, y)
        if method == "operator":
            defect = op(x) @ op(y) - op(y) @ op(x) - elem_op(br)
            if defect.is_zero():
                assertions += len(monos)
                continue
            candidates = monos
            is_bad: Callable[[ModuleVec], bool] = lambda v: bool(defect.apply(v))
        else:
            candidates = monos
            is_bad = lambda v: (act(spec, x, act(spec, y, v)) - act(spec, y, act(spec, x, v))
                                != act_elem(spec, br, v))
        for v in candidates:
            assertions += 1
            if is_bad(v):
                lhs = act(spec, x, act(spec, y, v)) - act(spec, y, act(spec, x, v))
                cex = _counterexample(pair=[x, y], input=v, lhs=lhs, rhs=act_elem(spec, br, v),
                                      bracket=br)
                break
        if cex:
            break
    return _result("module_axioms", spec, assertions, cex,
                   ranges={"m_max": m_max, "degree_cap": degree_cap},
                   details={"method": method, "pairs": len(pairs), "monomials": len(monos)})


def check_jacobi(kind: AlgebraKind, max_index: int = 5) -> CheckReport:
    """Jacobi identity on every ordered generator triple with ``|index| <= max_index``."""
    gens = basis(kind, max_index)
    n = 0
    for x, y, z in product(gens, repeat=3):
        n += 1
        d = jacobi_defect(kind, x, y, z)
        if d:
            return _result("jacobi", None, n, _counterexample(triple=[x, y, z], defect=d),
                           inputs={"algebra": kind.value, "max_index": max_index})
    return _result("jacobi", None, n, None, inputs={"algebra": kind.value, "max_index": max_index})


# --- identities of the W(2,2) constructions -------------------------------------

def check_h_derivative_identity(k: int, alpha: ScalarLike, m: int, n: int) -> CheckReport:
    """``n(t-n a) h'_{m,k} - m(t-m a) h'_{n,k} = -(n-m) m n a (t^k - a^k)/(t - a)``."""
    alpha = scalar(alpha)
    t = Poly1.var()
    lhs = ((t - n * alpha) * d_dt(h_monomial(m, k, alpha)) * n
           - (t - m * alpha) * d_dt(h_monomial(n, k, alpha)) * m)
    rhs = geometric_quotient(k, alpha) * (-(n - m) * m * n * alpha)
    cex = None if lhs == rhs else _counterexample(lhs=lhs, rhs=rhs)
    return _result("h_derivative_identity", None, 1, cex,
                   inputs={"k": k, "alpha": alpha, "m": m, "n": n})


def _require_big(spec: ModuleSpec, what: str) -> None:
    if spec.family is not Family.OMEGA_BIG:
        raise PreconditionViolated(f"{what} needs an omega_big module, got {spec.family.value}")


def check_w_combination(spec: ModuleSpec, m: int, f: Poly2) -> CheckReport:
    """``(2 W_0 W_m - W_{m+1} W_{-1} - W_{m-1} W_1) f = 2 lam^m alpha^2 f(t, s - m)``."""
    _require_big(spec, "check_w_combination")
    lhs = (act_word(spec, [W(0), W(m)], f) * 2
           - act_word(spec, [W(m + 1), W(-1)], f)
           - act_word(spec, [W(m - 1), W(1)], f))
    rhs = shift_s(f, m) * (2 * spec.lam ** m * spec.alpha ** 2)
    cex = None if lhs == rhs else _counterexample(input=f, lhs=lhs, rhs=rhs)
    return _result("w_combination", spec, 1, cex, inputs={"m": m, "f": f})


def check_claim1(spec: ModuleSpec, m: int, i: int, u: ModuleVec) -> CheckReport:
    """``W_m W_0^i u = W_0^i W_m u`` and ``W_m L_0^i u = (L_0 - m)^i W_m u``."""
    if spec.algebra is not AlgebraKind.W22:
        raise PreconditionViolated("check_claim1 needs omega_big or omega_w22")
    if i < 0:
        raise InvalidParam("i must be non-negative")
    lhs_w = act_word(spec, [W(m)] + [W(0)] * i, u)
    rhs_w = act_word(spec, [W(0)] * i + [W(m)], u)
    lhs_l = act_word(spec, [W(m)] + [L(0)] * i, u)
    wm_u = act(spec, W(m), u)
    rhs_l = spec.carrier()
    power = wm_u
    for r in range(i + 1):
        if r:
            power = act(spec, L(0), power)
        rhs_l = rhs_l + power * (comb(i, r) * (-m) ** (i - r))
    cex = None
    if lhs_w != rhs_w:
        cex = _counterexample(identity="W_m W_0^i = W_0^i W_m", input=u, lhs=lhs_w, rhs=rhs_w)
    elif lhs_l != rhs_l:
        cex = _counterexample(identity="W_m L_0^i = (L_0 - m)^i W_m", input=u, lhs=lhs_l, rhs=rhs_l)
    return _result("claim1", spec, 2, cex, inputs={"m": m, "i": i, "u": u})


def check_claim4(spec: ModuleSpec, m: int, fW: Poly1, u: Poly2) -> CheckReport:
    """``L_m f(W_0) u = f(W_0) L_m u - m f'(W_0) W_m u``, with ``f(W_0)`` applied through the action."""
    _require_big(spec, "check_claim4")
    fu = act_poly_in(spec, W(0), fW, u)
    lhs = act(spec, L(m), fu)
    rhs = (act_poly_in(spec, W(0), fW, act(spec, L(m), u))
           - act_poly_in(spec, W(0), d_dt(fW), act(spec, W(m), u)) * m)
    cex = None
    if fu != Poly2.from_poly1(fW) * u:
        cex = _counterexample(identity="f(W_0) u = f(t) u", input=u, lhs=fu,
                              rhs=Poly2.from_poly1(fW) * u)
    elif lhs != rhs:
        cex = _counterexample(identity="L_m f(W_0) u", input=u, lhs=lhs, rhs=rhs)
    return _result("claim4", spec, 2, cex, inputs={"m": m, "fW": fW.to_str("W0"), "u": u})


# --- degenerate structure (alpha = 0) ------------------------------------------

def _require_h0_form(spec: ModuleSpec, window: int) -> Poly1:
    """Return ``h`` with ``h_n = n h`` on the window, or raise."""
    _require_big(spec, "this check")
    if spec.alpha != 0:
        raise PreconditionViolated("alpha must be 0")
    h1 = spec.h(1)
    for n in range(-window, window + 1):
        if spec.h(n) != h1 * n:
            raise PreconditionViolated(f"h is not of the form n*h(t) (fails at n={n})")
    return h1


def check_t_power_submodule(spec: ModuleSpec, i: int, m_max: int = DEFAULT_M_MAX,
                            degree_cap: int = DEFAULT_DEGREE_CAP) -> CheckReport:
    """Every generator maps ``t^a s^b`` with ``a >= i`` into ``t^i C[t, s]``."""
    _require_h0_form(spec, max(m_max, 2))
    if i < 0:
        raise InvalidParam("i must be non-negative")
    n = 0
    cex = None
    for g in basis(spec.algebra, m_max):
        for v in monomials(Poly2, degree_cap, min_t=i):
            n += 1
            w = act(spec, g, v)
            if w.min_t_exponent() < i:
                cex = _counterexample(generator=g, input=v, image=w)
                break
        if cex:
            break
    return _result("t_power_submodule", spec, n, cex,
                   ranges={"m_max": m_max, "degree_cap": degree_cap}, inputs={"i": i})


def _t_multiple_invariance(spec: ModuleSpec, m_max: int, degree_cap: int,
                           budget: Optional["_Budget"] = None) -> Tuple[int, Optional[Dict[str, Any]]]:
    """Bounded check that ``t * carrier`` is invariant under all generators."""
    n = 0
    for g in basis(spec.algebra, m_max):
        for v in monomials(spec.carrier, degree_cap, min_t=1):
            if budget:
                budget.spend()
            n += 1
            w = act(spec, g, v)
            low = w.min_t_exponent() if isinstance(w, Poly2) else min(w.coeffs, default=float("inf"))
            if low < 1:
                return n, _counterexample(generator=g, input=v, image=w)
    return n, None


def check_quotient_iso(spec: ModuleSpec, i: int, m: int, g: Poly1,
                       m_max: int = DEFAULT_M_MAX, degree_cap: int = DEFAULT_DEGREE_CAP) -> CheckReport:
    """Compare ``L_m`` and ``W_m`` on ``t^i g(s)`` modulo ``t^{i+1}`` with ``Omega_W(lam, i - h(0))``.

    ``g`` is a polynomial in ``s`` given as :class:`Poly1`.  When ``i = h(0)``
    the quotient is ``Omega_W(lam, 0)``, whose submodule ``t C[t]`` is checked
    on the bounded range ``m_max``/``degree_cap``.
    """
    h = _require_h0_form(spec, max(abs(m), 2))
    if i < 0:
        raise InvalidParam("i must be non-negative")
    h0 = h(0)
    ti = Poly2.monomial(i, 0)
    v = ti * Poly2.from_poly1(g, "s")
    image = act(spec, L(m), v)
    reduced = image.truncate_t(i)
    s = Poly2.s()
    expected = ti * (s + m * (h0 - i)) * Poly2.from_poly1(shift_t(g, m), "s") * spec.lam ** m
    quotient = omega_w22(spec.lam, i - h0)
    model = ti * Poly2.from_poly1(act(quotient, L(m), g), "s")
    w_image = act(spec, W(m), v).truncate_t(i)

    assertions = 4
    cex = None
    if image.min_t_exponent() < i:
        cex = _counterexample(identity="L_m t^i g in t^i C[t,s]", input=v, lhs=image, rhs="t^i C[t,s]")
    elif reduced != expected:
        cex = _counterexample(identity="L_m t^i g mod t^(i+1)", input=v, lhs=reduced, rhs=expected)
    elif reduced != model:
        cex = _counterexample(identity="quotient = Omega_W(lam, i - h(0))", input=v, lhs=reduced, rhs=model)
    elif w_image:
        cex = _counterexample(identity="W_m acts as 0 on the quotient", input=v, lhs=w_image, rhs=0)

    details: Dict[str, Any] = {
        "h0": h0,
        "quotient": quotient.to_json(),
        "quotient_alpha": i - h0,
        "quotient_simple": i - h0 != 0,
    }
    if cex is None and i - h0 == 0:
        n, sub_cex = _t_multiple_invariance(quotient, m_max, degree_cap)
        assertions += n
        details["quotient_submodule"] = "t*C[t]"
        details["quotient_submodule_codim"] = 1
        if sub_cex:
            cex = _counterexample(identity="t*C[t] invariant in the quotient", **sub_cex)
    return _result("quotient_iso", spec, assertions, cex,
                   inputs={"i": i, "m": m, "g": g.to_str("s")}, details=details)


# --- simplicity evidence -------------------------------------------------------

class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(f"step budget of {self.limit} exhausted", self.used)


@dataclass
class ClosureState:
    """Reached subspace of a submodule closure search, in reduced echelon form.

    Coordinates are monomials (exponent ``e`` for ``t^e``, ``(i, j)`` for
    ``t^i s^j``); only images of total degree ``<= degree_cap`` are kept.
    """

    carrier: type
    degree_cap: int
    span: SpanState = field(init=False)
    inserted: List[ModuleVec] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.carrier is Poly1:
            self.span = SpanState(order=lambda e: e)
        else:
            self.span = SpanState(order=lambda k: (k[0] + k[1], k[0]))

    def _coords(self, v: ModuleVec) -> Dict[Any, Fraction]:
        return dict(v.coeffs)

    def admits(self, v: ModuleVec) -> bool:
        return bool(v) and v.degree() <= self.degree_cap

    def contains(self, v: ModuleVec) -> bool:
        return self.span.contains(self._coords(v))

    def insert(self, v: ModuleVec) -> bool:
        grew = self.span.insert(self._coords(v))
        if grew:
            self.inserted.append(v)
        return grew

    @property
    def dimension(self) -> int:
        return len(self.span)

    def basis(self) -> List[ModuleVec]:
        return [self.carrier.make(row) for row in self.span.basis()]


def closure_search(spec: ModuleSpec, seed: ModuleVec, m_max: int, degree_cap: int,
                   budget: _Budget, stop: Optional[Callable[[ClosureState], bool]] = None) -> ClosureState:
    """Grow the span of ``seed`` under all noncentral generators with ``|index| <= m_max``.

    Images above ``degree_cap`` are discarded, so the result under-approximates
    the generated submodule.  Stops when nothing new is added or ``stop`` holds.
    """
    state = ClosureState(spec.carrier, degree_cap)
    gens = basis(spec.algebra, m_max, central=False)
    queue = [seed] if state.admits(seed) and state.insert(seed) else []
    head = 0
    while head < len(queue):
        if stop and stop(state):
            break
        v = queue[head]
        head += 1
        for g in gens:
            budget.spend()
            w = act(spec, g, v)
            if state.admits(w) and state.insert(w):
                queue.append(w)
    return state


def _is_degenerate(spec: ModuleSpec) -> bool:
    if spec.family is Family.OMEGA_HV:
        return spec.alpha == 0 and spec.beta == 0
    return spec.alpha == 0


def simplicity_evidence(spec: ModuleSpec, seed: ModuleVec, m_max: int = DEFAULT_M_MAX,
                        degree_cap: int = DEFAULT_DEGREE_CAP,
                        step_budget: int = DEFAULT_STEP_BUDGET) -> CheckReport:
    """Try to reach ``1`` from ``seed`` inside the submodule it generates.

    Strategies: ``w_peeling`` (omega_big, alpha != 0), ``i_difference``
    (omega_hv, beta != 0), ``closure`` (other nondegenerate cases) and
    ``invariant_subspace`` (degenerate parameters, where ``t``-multiples form a
    proper submodule).  Running out of ``step_budget`` gives an inconclusive
    report, distinct from a failure.
    """
    if not isinstance(seed, spec.carrier) or not seed:
        raise PreconditionViolated("seed must be a nonzero vector of the module's carrier")
    budget = _Budget(step_budget)
    ranges = {"m_max": m_max, "degree_cap": degree_cap, "step_budget": step_budget}
    inputs = {"seed": seed}
    if _is_degenerate(spec):
        strategy = "invariant_subspace"
        runner = _evidence_degenerate
    elif spec.family is Family.OMEGA_BIG:
        strategy = "w_peeling"
        runner = _evidence_w_peeling
    elif spec.family is Family.OMEGA_HV and spec.beta != 0:
        strategy = "i_difference"
        runner = _evidence_i_difference
    else:
        strategy = "closure"
        runner = _evidence_closure
    try:
        status, cex, details = runner(spec, seed, m_max, degree_cap, budget)
    except BudgetExceeded as exc:
        status, cex = INCONCLUSIVE, None
        details = {"verdict": "inconclusive", "reason": str(exc)}
    details = {"strategy": strategy, "steps": budget.used, **details}
    return CheckReport("simplicity_evidence", spec, status, budget.used, cex, ranges, inputs, details)


_Outcome = Tuple[str, Optional[Dict[str, Any]], Dict[str, Any]]


def _span_everything(spec: ModuleSpec, degree_cap: int, budget: _Budget) -> Optional[Dict[str, Any]]:
    """From ``1``, produce every basis monomial with ``L_0`` (and ``W_0`` on ``C[t, s]``)."""
    one = spec.one()
    for v in monomials(spec.carrier, degree_cap):
        if spec.carrier is Poly1:
            word = [L(0)] * int(v.degree())
        else:
            (i, j), = v.coeffs
            word = [W(0)] * i + [L(0)] * j
        budget.spend(len(word))
        got = act_word(spec, word, one)
        if got != v:
            return _counterexample(identity="monomial from 1", input=one, lhs=got, rhs=v)
    return None


def _evidence_w_peeling(spec: ModuleSpec, seed: Poly2, m_max: int, degree_cap: int,
                        budget: _Budget) -> _Outcome:
    lam, al = spec.lam, spec.alpha
    trace: List[Dict[str, Any]] = [{"step": "seed", "vector": seed}]
    f = seed
    while f.deg_s() > 0:
        budget.spend(6)
        combo = (act_word(spec, [W(0), W(1)], f) * 2
                 - act_word(spec, [W(2), W(-1)], f)
                 - act_word(spec, [W(0), W(1)], f))
        target = shift_s(f, 1) * (2 * lam * al * al)
        if combo != target:
            return FAIL, _counterexample(identity="W-combination", input=f, lhs=combo, rhs=target), {}
        f = f - combo / (2 * lam * al * al)
        trace.append({"step": "W-combination gives f(t, s-1); difference lowers deg_s", "vector": f})
    while f.deg_t() > 0:
        parts = []
        for m in (1, 2):
            budget.spend(4 + int(max(spec.h(m).degree(), 0)))
            lm = lam ** m
            mult = act(spec, L(0), f) + act_poly_in(spec, W(0), spec.h(m), f)
            p = act(spec, L(m), f) - mult * lm
            expect = (Poly2.t() - m * al) * d_dt(f) * (-m * lm)
            if p != expect:
                return FAIL, _counterexample(identity=f"L_{m} f - lam^m (s + h_m) f", input=f,
                                             lhs=p, rhs=expect), {}
            parts.append(p / (-m * lm))
            trace.append({"step": f"L_{m} f - lam^{m}(s + h_{m}(W_0)) f = (t - {m}*alpha) f'",
                          "vector": parts[-1]})
        f = (parts[0] - parts[1]) / al
        trace.append({"step": "difference / alpha = f'", "vector": f})
    c = f.coeff(0, 0)
    f = f / c
    trace.append({"step": "normalize", "vector": f})
    cex = _span_everything(spec, degree_cap, budget)
    if cex:
        return FAIL, cex, {}
    return PASS, None, {"verdict": "simple-evidence", "reached_one": True, "trace": trace}


def _evidence_i_difference(spec: ModuleSpec, seed: Poly1, m_max: int, degree_cap: int,
                           budget: _Budget) -> _Outcome:
    trace: List[Dict[str, Any]] = [{"step": "seed", "vector": seed}]
    f = seed
    scale = spec.beta * spec.lam
    while f.degree() > 0:
        budget.spend()
        g = act(spec, Generator("I", 1), f) / scale
        if g != shift_t(f, 1):
            return FAIL, _counterexample(identity="I_1 f = beta lam f(t-1)", input=f,
                                         lhs=g * scale, rhs=shift_t(f, 1) * scale), {}
        f = f - g
        trace.append({"step": "f - I_1 f / (beta lam)", "vector": f})
    f = f / f.coeff(0)
    trace.append({"step": "normalize", "vector": f})
    cex = _span_everything(spec, degree_cap, budget)
    if cex:
        return FAIL, cex, {}
    return PASS, None, {"verdict": "simple-evidence", "reached_one": True, "trace": trace}


def _evidence_closure(spec: ModuleSpec, seed: ModuleVec, m_max: int, degree_cap: int,
                      budget: _Budget) -> _Outcome:
    one = spec.one()
    state = closure_search(spec, seed, m_max, degree_cap, budget, stop=lambda st: st.contains(one))
    details: Dict[str, Any] = {"closure_dimension": state.dimension}
    if state.contains(one):
        details.update(verdict="simple-evidence", reached_one=True)
        return PASS, None, details
    details.update(verdict="inconclusive", reached_one=False,
                   reason="closure stabilized under the degree cap without reaching 1")
    return INCONCLUSIVE, None, details


def _evidence_degenerate(spec: ModuleSpec, seed: ModuleVec, m_max: int, degree_cap: int,
                         budget: _Budget) -> _Outcome:
    subspace = "t*C[t]" if spec.carrier is Poly1 else "t*C[t,s]"
    n, cex = _t_multiple_invariance(spec, m_max, degree_cap, budget)
    if cex:
        return FAIL, cex, {}
    one = spec.one()
    state = closure_search(spec, seed, m_max, degree_cap, budget, stop=lambda st: st.contains(one))
    inside = all(
        (min(v.coeffs) if isinstance(v, Poly1) else v.min_t_exponent()) >= 1
        for v in state.inserted
    )
    return PASS, None, {
        "verdict": "proper-submodule",
        "invariant_subspace": subspace,
        "codimension_in_degree_cap": 1,
        "invariance_assertions": n,
        "seed_closure_dimension": state.dimension,
        "seed_closure_inside_subspace": inside,
        "reached_one": state.contains(one),
    }


# --- non-nilpotency -----------------------------------------------------------

def non_nilpotency_probe(spec: ModuleSpec, m: int, iterations: int, kind: str = "L") -> CheckReport:
    """Apply ``X_m`` repeatedly to ``1`` and record the degree of each power."""
    if m == 0:
        raise InvalidParam("m must be nonzero")
    if iterations < 1:
        raise InvalidParam("iterations must be positive")
    g = Generator(kind, m)
    v = spec.one()
    degrees: List[int] = []
    cex = None
    for j in range(1, iterations + 1):
        v = act(spec, g, v)
        if not v:
            cex = _counterexample(generator=g, power=j, input=spec.one(), lhs=v, rhs="nonzero")
            break
        degrees.append(int(v.degree()))
    increasing = all(a < b for a, b in zip(degrees, degrees[1:])) and (not degrees or degrees[0] >= 1)
    details = {
        "generator": g,
        "degrees": degrees,
        "strictly_increasing": increasing and cex is None,
        "verdict": "nilpotent" if cex else "not-nilpotent",
    }
    return _result("non_nilpotency", spec, len(degrees) + (1 if cex else 0), cex,
                   inputs={"m": m, "iterations": iterations, "kind": kind}, details=details)
