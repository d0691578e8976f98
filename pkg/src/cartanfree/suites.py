"""Suites: which checks run on which module, over which ranges.

A suite maps one module spec (or none, for spec-independent checks) to a list
of :class:`CheckReport`.  Checks that run over many instances are folded into
a single report per check and spec.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

from . import classification as cl
from .errors import NotInFamily
from .exactpoly import Poly1, Poly2, random_poly1, random_poly2
from .liealg import AlgebraKind
from .modules import Family, ModuleSpec
from .verify import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    CheckReport,
    _counterexample,
    _is_degenerate,
    _result,
    check_claim1,
    check_claim4,
    check_h_derivative_identity,
    check_jacobi,
    check_module_axioms,
    check_quotient_iso,
    check_t_power_submodule,
    check_w_combination,
    monomials,
    non_nilpotency_probe,
    simplicity_evidence,
)

SUITES = ("axioms", "identities", "simplicity", "classification")

PROBE_INDICES = (1, -1, 3)
MAX_K = 6
T_POWER_MAX = 4


@dataclass(frozen=True)
class Settings:
    m_max: int = 6
    degree_cap: int = 8
    step_budget: int = 10_000
    iterations: int = 20
    seed: int = 0
    seed_degree: int = 2
    samples: int = 2


def fold(check: str, spec: Optional[ModuleSpec], reports: Iterable[CheckReport],
         ranges: Optional[Dict[str, int]] = None, **details) -> CheckReport:
    """One report summarizing many: the first failure wins, then any inconclusive."""
    reports = list(reports)
    assertions = sum(r.assertions for r in reports)
    statuses = Counter(r.status for r in reports)
    details = {"instances": len(reports), **details}
    verdicts = Counter(r.details["verdict"] for r in reports if "verdict" in r.details)
    if verdicts:
        details["verdicts"] = dict(sorted(verdicts.items()))
    failed = next((r for r in reports if r.status == FAIL), None)
    if failed:
        cex = {"inputs": failed.to_json()["inputs"], **failed.counterexample}
        return CheckReport(check, spec, FAIL, assertions, cex, ranges, {}, details)
    status = INCONCLUSIVE if statuses[INCONCLUSIVE] else PASS
    if statuses[INCONCLUSIVE]:
        details["inconclusive"] = statuses[INCONCLUSIVE]
    return CheckReport(check, spec, status, assertions, None, ranges, {}, details)


def _rng(settings: Settings, *tags: object) -> random.Random:
    return random.Random(":".join(map(str, (settings.seed,) + tags)))


def _window(settings: Settings) -> range:
    return range(-settings.m_max, settings.m_max + 1)


# --- spec-independent checks -------------------------------------------------------

def global_axioms(settings: Settings) -> List[CheckReport]:
    return [check_jacobi(kind, min(settings.m_max, 5)) for kind in AlgebraKind]


def global_classification(settings: Settings) -> List[CheckReport]:
    out = [cl.solve_3_22(k) for k in range(MAX_K + 1)]
    rng = _rng(settings, "defects")
    hv, ww = [], []
    for _ in range(settings.samples * 10):
        f = random_poly1(rng, rng.randint(1, settings.degree_cap))
        m = rng.choice([x for x in _window(settings) if x])
        hv.append(cl.check_hv_leading_term(f, m, rng.choice([1, 2, -1]), rng.randint(-3, 3)))
        fm = random_poly1(rng, rng.randint(0, settings.degree_cap))
        fn = random_poly1(rng, rng.randint(0, settings.degree_cap))
        m, n = rng.randint(-settings.m_max, 0), rng.randint(0, settings.m_max)
        if n * fm.degree() != m * fn.degree():
            ww.append(cl.check_ww_leading_term(fm, fn, m, n))
    out.append(fold("hv_leading_term", None, hv))
    out.append(fold("ww_leading_term", None, ww))
    return out


# --- per-spec checks ----------------------------------------------------------------

def spec_axioms(spec: ModuleSpec, settings: Settings) -> List[CheckReport]:
    return [check_module_axioms(spec, settings.m_max, settings.degree_cap)]


def spec_identities(spec: ModuleSpec, settings: Settings) -> List[CheckReport]:
    if spec.algebra is not AlgebraKind.W22:
        return []
    rng = _rng(settings, "identities", spec)
    win = _window(settings)
    deg = min(settings.degree_cap, 4)
    vecs = [random_poly2(rng, deg) if spec.carrier is Poly2 else random_poly1(rng, deg)
            for _ in range(settings.samples)]
    out = [fold("claim1", spec, (check_claim1(spec, m, i, u)
                                 for m in win for i in range(3) for u in vecs),
                {"m_max": settings.m_max})]
    if spec.family is not Family.OMEGA_BIG:
        return out
    out.append(fold("w_combination", spec, (check_w_combination(spec, m, u) for m in win for u in vecs),
                    {"m_max": settings.m_max}))
    fws = [random_poly1(rng, rng.randint(0, 3)) for _ in range(settings.samples)]
    out.append(fold("claim4", spec, (check_claim4(spec, m, fw, u)
                                     for m in win for fw, u in zip(fws, vecs)),
                    {"m_max": settings.m_max}))
    out.append(fold("h_derivative_identity", spec,
                    (check_h_derivative_identity(k, spec.alpha, m, n)
                     for k in range(MAX_K + 1) for m in win for n in win if m < n),
                    {"m_max": settings.m_max}))
    return out


def spec_simplicity(spec: ModuleSpec, settings: Settings) -> List[CheckReport]:
    seeds = monomials(spec.carrier, min(settings.seed_degree, settings.degree_cap))
    ranges = {"m_max": settings.m_max, "degree_cap": settings.degree_cap,
              "step_budget": settings.step_budget}
    out = [fold("simplicity_evidence", spec,
                (simplicity_evidence(spec, v, settings.m_max, settings.degree_cap, settings.step_budget)
                 for v in seeds), ranges, seed_degree=settings.seed_degree)]
    kinds = ["L"]
    if spec.family is Family.OMEGA_BIG:
        kinds.append("W")
    for kind in kinds:
        out.extend(non_nilpotency_probe(spec, m, settings.iterations, kind) for m in PROBE_INDICES)
    if spec.family is Family.OMEGA_BIG and _is_degenerate(spec) and not spec.negative_control:
        out.append(fold("t_power_submodule", spec,
                        (check_t_power_submodule(spec, i, settings.m_max, min(settings.degree_cap, 6))
                         for i in range(T_POWER_MAX + 1)), ranges))
        gs = [Poly1.const(1), Poly1.var(), Poly1.make({2: 1, 0: -3})]
        out.append(fold("quotient_iso", spec,
                        (check_quotient_iso(spec, i, m, g, settings.m_max, min(settings.degree_cap, 4))
                         for i in range(T_POWER_MAX + 1) for m in _window(settings) for g in gs),
                        ranges))
    return out


def spec_classification(spec: ModuleSpec, settings: Settings) -> List[CheckReport]:
    win = _window(settings)
    lam, alpha = spec.lam, spec.alpha
    if spec.family is Family.OMEGA_HV:
        return [cl.check_i_recurrence(lam, spec.beta)]
    if spec.family is Family.OMEGA_W22:
        return [cl.w22_rank1_contradiction(lam)]
    if spec.family is Family.OMEGA_VIR:
        return []
    out = [fold("a_family_identity", spec, (cl.check_3_13(lam, alpha, m, n) for m in win for n in win)),
           cl.check_a_coeffs(lam, -alpha * lam)]
    if spec.negative_control:
        out.append(_decomposition(spec, settings))
        return out
    out.append(fold("h_family_identity", spec,
                    (cl.check_3_21(spec.xi, alpha, m, n) for m in win for n in win)))
    out.append(_decomposition(spec, settings))
    fam = cl.solve_a_coeffs(lam, -alpha * lam, settings.m_max)
    out.append(cl.check_reconstruction(fam, spec.xi))
    return out


def _decomposition(spec: ModuleSpec, settings: Settings) -> CheckReport:
    """Recover ``xi`` from the module's own ``h_n``; the negative control must be rejected."""
    fam = cl.CoeffFamily({n: spec.h(n) for n in _window(settings)})
    inputs = {"alpha": spec.alpha}
    try:
        xi = cl.decompose_into_h_basis(fam, spec.alpha)
    except NotInFamily as exc:
        return _result("h_decomposition", spec, 1,
                       _counterexample(identity="h_n in H_alpha", reason=str(exc)), inputs=inputs)
    expected = list(spec.xi)
    while expected and not expected[-1]:
        expected.pop()
    cex = None if xi == expected else _counterexample(identity="round trip", lhs=xi, rhs=expected)
    return _result("h_decomposition", spec, 1, cex, inputs=inputs, details={"xi": xi})


GLOBAL: Dict[str, Callable[[Settings], List[CheckReport]]] = {
    "axioms": global_axioms,
    "identities": lambda settings: [],
    "simplicity": lambda settings: [],
    "classification": global_classification,
}

PER_SPEC: Dict[str, Callable[[ModuleSpec, Settings], List[CheckReport]]] = {
    "axioms": spec_axioms,
    "identities": spec_identities,
    "simplicity": spec_simplicity,
    "classification": spec_classification,
}
