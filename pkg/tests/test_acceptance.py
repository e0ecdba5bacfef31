"""Acceptance criteria, one test each, all at exact equality.

Each test records a PASS/FAIL line that is echoed in the terminal summary.
"""

import random
import time

from conftest import ACCEPTANCE_LINES
from toeplitz_algebras.algebras import (
    ScalarCirculant,
    SchurOpq,
    SinglyGen,
    bsg_equal,
    bsg_generators,
    membership,
    order_slice_basis,
    schur_generators,
)
from toeplitz_algebras.blocktoeplitz import BlockToeplitz, CyclicDiagonal, toeplitz_product
from toeplitz_algebras.classify import (
    assert_schur_maximal,
    closure_check,
    enumerate_xm,
    extension_space,
    has_invertible_offdiagonal,
    is_maximal,
    xm_obstruction,
)
from toeplitz_algebras.errors import PreconditionError
from toeplitz_algebras.linalg import Span
from toeplitz_algebras.matrixcore import OpqAlgebra, PMElement, PolyModAlgebra
from toeplitz_algebras.oracle import (
    DEFAULT_IMPL,
    TrialConfig,
    iter_trials,
    random_member,
    random_monic,
    random_singly_gen,
    run_check,
    run_suite,
)
from toeplitz_algebras.scalars import Poly, X, gr, poly_coprime

ONE = Poly.one()


def record(number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number:2d} {status}: {title}"
    if failures:
        line += f" ({len(failures)} failing: {failures[0]})"
    elif detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def pm(p, r):
    return PMElement(p, r if isinstance(r, Poly) else Poly.const(r))


def test_criterion_01_compatibility_matches_dense_scan():
    failures, trials = [], 0
    start = time.perf_counter()
    for n in range(2, 7):
        for d in range(1, 5):
            report = run_suite(TrialConfig(seed=2024, trials=200, n_range=(n, n), d_range=(d, d), suite="prod"))
            trials += report.trials
            failures += [(n, d, f["trial"], f["detail"]) for f in report.failures]
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s exceeds 60s")
    record(1, "compatible() agrees with the dense diagonal scan", failures, f"{trials} trials in {elapsed:.1f}s")


def test_criterion_02_compatible_pairs_commute():
    failures, compatible_trials = [], 0
    for n in range(2, 7):
        for d in range(1, 5):
            config = TrialConfig(seed=2024, trials=200, n_range=(n, n), d_range=(d, d), suite="prod")
            for t, _, _, inst in iter_trials(config):
                if not DEFAULT_IMPL["compatible"](inst["A"], inst["B"]):
                    continue
                compatible_trials += 1
                A, B = inst["A"], inst["B"]
                if toeplitz_product(A, B) != toeplitz_product(B, A):
                    failures.append((n, d, t))
                msg = run_check("commute", inst)
                if msg:
                    failures.append((n, d, t, msg))
    record(2, "AB = BA in every compatible trial", failures, f"{compatible_trials} compatible trials")


def test_criterion_03_cyclic_diagonal_products():
    report = run_suite(TrialConfig(seed=2024, trials=500, n_range=(2, 6), d_range=(1, 4), suite="cdprod"))
    failures = [(f["trial"], f["detail"]) for f in report.failures]
    record(3, "cyclic-diagonal product order and case formulas", failures, f"{report.trials} pairs")


def _closure_specs(rng):
    specs = []
    kinds = ["power", "power", "squarefree", "squarefree", "split", "split", "shifted", "random", "power", "squarefree"]
    for i, kind in enumerate(kinds):
        d = 1 + i % 4
        p, factors = random_monic(rng, d, kind=kind)
        n = rng.randint(2, 5)
        specs.append(random_singly_gen(rng, n, p, factors))
    return specs


def test_criterion_04_members_are_closed_under_products():
    rng = random.Random("criterion-4")
    specs = _closure_specs(rng)
    assert any(s.p == X ** s.d for s in specs)
    failures = []
    for s_index, spec in enumerate(specs):
        for pair in range(100):
            inst = {"spec": spec, "A": random_member(spec, rng), "B": random_member(spec, rng)}
            msg = run_check("closure", inst)
            if msg:
                failures.append((s_index, pair, msg))
    record(4, "products of members are block Toeplitz members", failures, "10 specs x 100 pairs")


def _slice_space(spec, n):
    alg = PolyModAlgebra(spec.p)
    ext = extension_space(bsg_generators(spec, n), 1, alg)
    return Span(2 * alg.dim, [alg.coords(D.top) + alg.coords(D.bottom) for D in ext])


def test_criterion_05_equality_matches_slice_spaces():
    rng = random.Random("criterion-5")
    pairs = []
    while len(pairs) < 50:
        d = rng.randint(1, 4)
        p, factors = random_monic(rng, d)
        s1 = random_singly_gen(rng, rng.randint(2, 4), p, factors)
        w = Poly([rng.randint(-4, 4) for _ in range(d)])
        chi2 = s1.chi + s1.q * w
        if poly_coprime(chi2, p):
            pairs.append((s1, SinglyGen(p, s1.p_plus, s1.p_minus, chi2, s1.n)))
    distinct = 0
    while distinct < 50:
        d = rng.randint(1, 4)
        p, factors = random_monic(rng, d)
        n = rng.randint(2, 4)
        s1 = random_singly_gen(rng, n, p, factors)
        s2 = random_singly_gen(rng, n, p, factors)
        same_split = s1.p_plus == s2.p_plus and s1.p_minus == s2.p_minus
        if same_split and (s1.q.degree < 1 or (s1.chi - s2.chi) % s1.q == Poly.zero()):
            continue
        pairs.append((s1, s2))
        distinct += 1
    failures = []
    for index, (s1, s2) in enumerate(pairs):
        extensional = _slice_space(s1, s1.n) == _slice_space(s2, s1.n)
        if bsg_equal(s1, s2) != extensional:
            failures.append((index, str(s1), str(s2)))
    record(5, "bsg_equal matches order-1 slice spaces", failures, "50 equal + 50 distinct pairs")


def _scalar_toeplitz(rng, n, p, xi_val, alpha):
    t = {0: gr(rng.randint(-5, 5))}
    mode = rng.randrange(3)
    for i in range(1, n):
        top = gr(rng.randint(-5, 5))
        if mode == 0:
            bottom = alpha * top  # t_(i-n) = alpha t_i
        elif mode == 1:
            bottom = top / xi_val  # t_i = xi t_(i-n)
        else:
            bottom = gr(rng.randint(-5, 5))
        t[i], t[i - n] = top, bottom
    return BlockToeplitz(n, {j: pm(p, v) for j, v in t.items()}, zero=pm(p, 0))


def test_criterion_06_classification_round_trip():
    failures = []
    report = run_suite(TrialConfig(seed=2024, trials=20, n_range=(2, 4), d_range=(1, 4), suite="classify"))
    failures += [("round trip", f["trial"], f["detail"]) for f in report.failures]
    # scalar case, read literally: SinglyGen(1, 1, xi) is Pi_alpha with alpha = xi(lambda)
    rng = random.Random("criterion-6")
    mismatches = 0
    for _ in range(60):
        lam = gr(rng.randint(-3, 3), rng.choice([0, 0, 1]))
        p = X - lam
        xi = Poly.const(gr(rng.choice([-3, -2, 2, 3, 5])))
        n = rng.randint(2, 4)
        spec = SinglyGen(p, ONE, ONE, xi, n)
        alpha = xi(lam)
        T = _scalar_toeplitz(rng, n, p, xi(lam), alpha)
        if membership(spec, T) != membership(ScalarCirculant(alpha, n), T):
            mismatches += 1
    if mismatches:
        failures.append(f"scalar case disagrees with alpha = xi(lambda) on {mismatches}/60 samples")
    record(6, "classification round trip and scalar case alpha = xi(lambda)", failures)


def _diagonals(n, p):
    return [BlockToeplitz(n, {0: pm(p, X ** r)}, zero=pm(p, 0)) for r in range(p.degree)]


def test_criterion_07_maximality():
    failures, checked = [], 0
    for m in (1, 2, 3):
        for n in (2, 3, 4):
            for stratum in enumerate_xm(m, n):
                checked += 1
                if not is_maximal(bsg_generators(stratum.representative(n))):
                    failures.append(("representative not maximal", m, n, stratum.k_plus, stratum.k_minus))
            p = X ** m
            checked += 1
            if is_maximal(_diagonals(n, p)):
                failures.append(("diagonals maximal", m, n))
            if m == 1:
                continue  # every nonzero entry is invertible over X
            for k in range(1, n):
                for top, bottom in [(X, X), (X, 0), (0, X), (X ** (m - 1), X)]:
                    D = CyclicDiagonal(n, k, pm(p, top), pm(p, bottom)).to_toeplitz()
                    checked += 1
                    if is_maximal(_diagonals(n, p) + [D]):
                        failures.append(("diagonals + cyclic diagonal maximal", m, n, k, str(top), str(bottom)))
    record(7, "maximality of strata and non-maximality of small algebras", failures, f"{checked} algebras")


def test_criterion_08_xm_strata():
    failures = []
    for m in (1, 2, 3):
        strata = enumerate_xm(m, 3)
        if len(strata) != (m + 1) * (m + 2) // 2:
            failures.append(("count", m, len(strata)))
        if sum(s.rigid for s in strata) != m + 1:
            failures.append(("rigid count", m))
        for s in strata:
            if s.pseudocirculant != has_invertible_offdiagonal(s.representative(3)):
                failures.append(("flag disagrees with direct search", m, s.k_plus, s.k_minus))
            if s.rigid and 0 < s.k_plus < m:
                if s.pseudocirculant:
                    failures.append(("flagged pseudocirculant", m, s.k_plus, s.k_minus))
                for n in (2, 3, 4):
                    info = xm_obstruction(m, s.k_plus, s.k_minus, n)
                    Y = info["Y"]
                    ok = (
                        info["Y_member"]
                        and info["Y_prime_member"]
                        and info["A_candidates_noninvertible"]
                        and info["B_candidates_noninvertible"]
                        and info["kernel_shared"]
                        and all(Y[i] == pm(X ** m, X ** s.k_plus) for i in range(n))
                    )
                    if not ok:
                        failures.append(("obstruction", m, s.k_plus, s.k_minus, n))
    record(8, "strata counts and the Y-matrix obstruction", failures)


def test_criterion_09_structure_of_members():
    report = run_suite(TrialConfig(seed=2024, trials=200, n_range=(2, 5), d_range=(1, 4), suite="action"))
    failures = [(f["trial"], f["detail"]) for f in report.failures]
    for m in (1, 2, 3):
        for n in (2, 3, 4):
            for s in enumerate_xm(m, n):
                spec = s.representative(n)
                pairs = order_slice_basis(spec)
                gens = bsg_generators(spec)
                for k in range(1, n):
                    if not pairs or not extension_space(gens, k):
                        failures.append(("empty order slice", m, n, s.k_plus, s.k_minus, k))
                    for top, bottom in pairs:
                        if not membership(spec, CyclicDiagonal(n, k, top, bottom).to_toeplitz()):
                            failures.append(("slice pair not a member", m, n, k))
    record(9, "E_k, relabeling and nonzero order slices", failures, f"{report.trials} trials")


def test_criterion_10_schur_algebra():
    failures = []
    for n in (2, 3):
        for p, q in [(1, 1), (1, 2), (2, 2)]:
            gens = schur_generators(p, q, n)
            spec = SchurOpq(p, q, n)
            if not closure_check(gens):
                failures.append(("not closed", p, q, n))
            for A in gens:
                if not membership(spec, A):
                    failures.append(("generator not a member", p, q, n))
                for B in gens:
                    if not membership(spec, toeplitz_product(A, B)):
                        failures.append(("product not a member", p, q, n))
            if not is_maximal(gens, OpqAlgebra(p, q)):
                failures.append(("not maximal", p, q, n))
        if not assert_schur_maximal(1, 1, n) or not assert_schur_maximal(1, 2, n):
            failures.append(("asserter rejects a valid pair", n))
        # read literally: (2, 2) is declared to violate |p - q| <= 1 and must be rejected
        try:
            assert_schur_maximal(2, 2, n)
            failures.append(f"(2, 2) was not rejected by the precondition at n={n}")
        except PreconditionError:
            pass
    record(10, "Schur algebra O_(p,q) closure, membership, maximality", failures)
