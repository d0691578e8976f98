"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the terminal summary by ``conftest.py``.
"""

import functools
import random
import time
from fractions import Fraction
from itertools import product

from cartanfree.classification import (
    check_3_13,
    check_3_21,
    check_hv_leading_term,
    check_i_recurrence,
    check_ww_leading_term,
    decompose_into_h_basis,
    h_family,
    solve_3_22,
    solve_i_recurrence,
    w22_rank1_contradiction,
)
from cartanfree.cli import DEFAULT_GRID, expand_grid
from cartanfree.exactpoly import Poly1, Poly2, random_poly1, random_poly2, sample_scalars
from cartanfree.liealg import AlgebraKind
from cartanfree.modules import Family, omega_big, omega_hv
from cartanfree.verify import (
    FAIL,
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

from test_cli import CASES, GOLDEN, _cli

LAMBDAS = [Fraction(x) for x in DEFAULT_GRID["lambda"]]
ALPHAS = [Fraction(x) for x in DEFAULT_GRID["alpha"]]
BETAS = [Fraction(x) for x in DEFAULT_GRID["beta"]]
XIS = [tuple(Fraction(c) for c in xi) for xi in DEFAULT_GRID["xi"]]
GRID = expand_grid(DEFAULT_GRID)
WINDOW = range(-8, 9)

RESULTS = {}


def criterion(number, title):
    """Record the outcome of an acceptance test under ``number``."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                info = fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[number] = ("FAIL", title, f"{type(exc).__name__}: {exc}".splitlines()[0])
                raise
            took = time.perf_counter() - start
            RESULTS[number] = ("PASS", title, f"{info}; {took:.1f} s" if info else f"{took:.1f} s")
        return run
    return wrap


def _failures(reports):
    return [r for r in reports if not r.passed]


def _family(name):
    return [s for s in GRID if s.family is Family(name)]


@criterion(1, "module axioms on the full grid, m_max 6, degree cap 8, under 60 s")
def test_criterion_1_axioms():
    start = time.perf_counter()
    reports = [check_module_axioms(spec, 6, 8) for spec in GRID]
    took = time.perf_counter() - start
    assert not _failures(reports)
    assert {s.family for s in GRID} == set(Family)
    assert took < 60, f"took {took:.1f} s"
    return f"{len(reports)} modules, {sum(r.assertions for r in reports)} assertions"


@criterion(2, "negative control h_n = n^2 t yields exact counterexample pairs")
def test_criterion_2_negative_control():
    pairs = 0
    for lam, alpha in product(LAMBDAS, ALPHAS):
        r = check_module_axioms(omega_big(lam, alpha, (), negative_control=True), 6, 8)
        assert r.status == FAIL
        cex = r.counterexample
        assert len(cex["pair"]) == 2 and cex["lhs"] != cex["rhs"]
        pairs += 1
    return f"{pairs} of {pairs} parameter pairs rejected"


@criterion(3, "Jacobi identity for all three algebras, |index| <= 5")
def test_criterion_3_jacobi():
    reports = [check_jacobi(kind, 5) for kind in AlgebraKind]
    assert not _failures(reports)
    return f"{sum(r.assertions for r in reports)} triples"


@criterion(4, "identity checks for |m|, |n| <= 8 and k <= 6 across the grid")
def test_criterion_4_identities():
    rng = random.Random("acceptance-4")
    reports = []
    for k, alpha, m, n in product(range(7), ALPHAS, WINDOW, WINDOW):
        reports.append(check_h_derivative_identity(k, alpha, m, n))
    for lam, alpha, m, n in product(LAMBDAS, ALPHAS, WINDOW, WINDOW):
        reports.append(check_3_13(lam, alpha, m, n))
    for xi, alpha, m, n in product(XIS, ALPHAS, WINDOW, WINDOW):
        reports.append(check_3_21(xi, alpha, m, n))
    for spec in _family("omega_w22") + _family("omega_big"):
        u = random_poly2(rng, 3) if spec.carrier is Poly2 else random_poly1(rng, 3)
        reports.extend(check_claim1(spec, m, i, u) for m in WINDOW for i in range(4))
        if spec.family is Family.OMEGA_BIG:
            fw = random_poly1(rng, rng.randint(0, 3))
            reports.extend(check_w_combination(spec, m, u) for m in WINDOW)
            reports.extend(check_claim4(spec, m, fw, u) for m in WINDOW)
    assert not _failures(reports)
    for k in range(7):
        r = solve_3_22(k, 8)
        assert r.passed and r.details["nullspace_dimension"] == 1
        if k == 0:
            assert "c_1 = 0" in r.details["case1"]
        else:
            assert r.details["difference_factor"] == -k * (k + 1) * (k + 2)
    return f"{len(reports)} identity instances, linear recurrence forced for k <= 6"


@criterion(5, "degenerate structure: t-power submodules, quotients, invariant subspaces")
def test_criterion_5_degenerate():
    n = 0
    h_xis = [(), (Fraction(1),), (0, Fraction(1)), (Fraction(2), Fraction(-1))]
    gs = [Poly1.const(1), Poly1.const(-3), Poly1.var(), Poly1.make({1: 2, 0: 1})]
    for lam, xi in product(LAMBDAS, h_xis):
        spec = omega_big(lam, 0, xi)
        for i in range(5):
            assert check_t_power_submodule(spec, i, 6, 6).passed
            n += 1
            for m, g in product(range(-6, 7), gs):
                r = check_quotient_iso(spec, i, m, g, 3, 3)
                assert r.passed, r.counterexample
                assert r.details["quotient_alpha"] == i - spec.h(1)(0)
                n += 1
    for lam in LAMBDAS:
        for spec, seeds, subspace in [
            (omega_hv(lam, 0, 0), [Poly1.var(), Poly1.monomial(3) + Poly1.var()], "t*C[t]"),
            (omega_big(lam, 0, (0, 1)), [Poly2.t(), Poly2.t() * Poly2.s()], "t*C[t,s]"),
            (omega_big(lam, 0, (Fraction(2),)), [Poly2.t() * Poly2.t()], "t*C[t,s]"),
        ]:
            for seed in seeds:
                r = simplicity_evidence(spec, seed, 4, 5)
                assert r.passed and r.details["verdict"] == "proper-submodule"
                assert r.details["invariant_subspace"] == subspace
                assert r.details["seed_closure_inside_subspace"] and not r.details["reached_one"]
                n += 1
    return f"{n} checks"


@criterion(6, "simplicity evidence from monomial seeds")
def test_criterion_6_simplicity():
    counts = {"w_peeling": 0, "i_difference": 0, "closure-pass": 0, "closure-inconclusive": 0}
    for spec in _family("omega_big"):
        if spec.alpha == 0:
            continue
        for seed in monomials(Poly2, 5):
            r = simplicity_evidence(spec, seed)
            assert r.passed and r.details["strategy"] == "w_peeling" and r.details["reached_one"]
            counts["w_peeling"] += 1
    for spec in _family("omega_hv"):
        if spec.beta == 0:
            continue
        for seed in monomials(Poly1, 5):
            r = simplicity_evidence(spec, seed)
            assert r.passed and r.details["strategy"] == "i_difference"
            counts["i_difference"] += 1
    for lam, alpha in product(LAMBDAS, ALPHAS):
        if alpha == 0:
            continue
        for seed in monomials(Poly1, 3):
            r = simplicity_evidence(omega_hv(lam, alpha, 0), seed, 6, 8)
            assert r.status != FAIL and r.details["verdict"] != "proper-submodule"
            counts["closure-pass" if r.passed else "closure-inconclusive"] += 1
    return ", ".join(f"{k} {v}" for k, v in counts.items())


@criterion(7, "classification oracles on seeded random inputs")
def test_criterion_7_classification():
    rng = random.Random("acceptance-7")
    for _ in range(200):
        f = random_poly1(rng, rng.randint(0, 8))
        m = rng.choice([k for k in range(-6, 7) if k])
        lam, alpha = sample_scalars(rng, 1, nonzero=True)[0], sample_scalars(rng, 1)[0]
        assert check_hv_leading_term(f, m, lam, alpha).passed
    done = 0
    while done < 200:
        fm, fn = random_poly1(rng, rng.randint(0, 8)), random_poly1(rng, rng.randint(0, 8))
        m, n = rng.randint(-6, 0), rng.randint(0, 6)
        if n * fm.degree() == m * fn.degree():
            continue
        assert check_ww_leading_term(fm, fn, m, n).passed
        done += 1
    for lam, c0 in product(LAMBDAS, [Fraction(0), Fraction(1), Fraction(-5, 2)]):
        fam = solve_i_recurrence(lam, c0)
        assert all(fam[m] == c0 * lam ** m for m in fam.indices())
        assert fam.constants == {"c2": 0, "c3": 0}
        assert check_i_recurrence(lam, c0).passed
    lams = LAMBDAS + [Fraction(-1, 3)]
    for lam in lams:
        r = w22_rank1_contradiction(lam)
        assert r.passed and r.details["nullspace_dimension"] == 0
    for _ in range(100):
        xi = sample_scalars(rng, rng.randint(0, 6))
        while xi and not xi[-1]:
            xi.pop()
        alpha = sample_scalars(rng, 1)[0]
        assert decompose_into_h_basis(h_family(xi, alpha, 6), alpha) == list(xi)
    return f"400 leading terms, {len(lams)} W22 contradictions, 100 round trips"


@criterion(8, "non-nilpotency of L_m on 1, 20 iterations, m in {1, -1, 3}")
def test_criterion_8_probe():
    n = 0
    for spec in _family("omega_vir") + _family("omega_hv") + _family("omega_big"):
        for m in (1, -1, 3):
            r = non_nilpotency_probe(spec, m, 20)
            assert r.passed and r.details["strictly_increasing"] and len(r.details["degrees"]) == 20
            n += 1
    return f"{n} probes"


@criterion(9, "CLI golden-file determinism and exit codes")
def test_criterion_9_cli(tmp_path):
    for name, code, ext in CASES:
        out = tmp_path / f"{name}.{ext}"
        proc = _cli("--config", str(GOLDEN / f"{name}.json"), "--out", str(out))
        assert proc.returncode == code, proc.stderr
        assert out.read_bytes() == (GOLDEN / f"{name}.out.{ext}").read_bytes()
    bad = tmp_path / "bad.json"
    bad.write_text('{"suites": ["bogus"]}')
    assert _cli("--config", str(bad)).returncode == 2
    return f"{len(CASES)} golden files, exit codes 0/1/2"
