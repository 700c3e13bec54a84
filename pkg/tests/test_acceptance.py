"""Acceptance suite: one test per primary criterion.

Each test gathers every failing case, prints a single ``PASS``/``FAIL`` line
and then asserts.  Run with ``pytest tests/test_acceptance.py -v -s`` to see
the summary lines interleaved with pytest's own output.
"""

import itertools
import math
import random
import time

import mpmath
import pytest
from gmpy2 import mpq

from calogero import construct as C
from calogero import norms as Nm
from calogero import oracle as O
from calogero import weyl
from calogero.dunkl import cherednik_d, hamiltonian_apply
from calogero.errors import InvalidSector
from calogero.exactpoly import exchange, reflect
from calogero.params import Params
from calogero.relations import operator_relations

from .conftest import random_poly

POINTS = [("3/7", "2/5", "1/2"), ("5/3", "1/4", "1"), ("7/11", "3/2", "2/3")]
GENERIC = [Params(fam, a, b, w) for fam in "AB" for a, b, w in POINTS]

# pinned tolerances and budgets
PRECISION = 40
GRAM_TOL = mpmath.mpf(10) ** -25
RELATION_BUDGET_S = 120
N_RANDOM_POLYS = 100


@pytest.fixture
def report(capsys):
    def emit(number, title, failures, extra=""):
        status = "PASS" if not failures else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if extra:
            line += f" ({extra})"
        if failures:
            line += f"; first failure: {failures[0]}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def _compositions(max_N, max_deg):
    for N in range(1, max_N + 1):
        yield from weyl.compositions_upto(N, max_deg)


def _sectors(params, mu_plus):
    for sign in (1, -1):
        try:
            C.check_sector(params.family, mu_plus, sign)
        except InvalidSector:
            continue
        yield sign


def test_criterion_1_operator_relations(report):
    rng = random.Random(20240601)
    combos = [(p, N) for p in GENERIC for N in (2, 3, 4)]
    relations = {(p, N): operator_relations(p, N) for p, N in combos}
    failures, checked = [], 0
    start = time.perf_counter()
    for i in range(N_RANDOM_POLYS):
        p, N = combos[i % len(combos)]
        f = random_poly(rng, N, 5)
        for rel in relations[(p, N)]:
            checked += 1
            if not rel.holds(f):
                failures.append(f"{p} N={N} {rel.name}")
    elapsed = time.perf_counter() - start
    if elapsed > RELATION_BUDGET_S:
        failures.append(f"runtime {elapsed:.1f}s exceeds {RELATION_BUDGET_S}s")
    report(1, "operator relations on random polynomials", failures,
           f"{N_RANDOM_POLYS} polys, {checked} checks, {elapsed:.1f}s")


def test_criterion_2_rodrigues_correctness(report):
    failures, count = [], 0
    for p in GENERIC:
        for mu in _compositions(4, 5):
            count += 1
            h = C.nonsym_poly(p, mu)
            if O.triangular_eigensolve(p, mu) != h.poly:
                failures.append(f"{p} {mu}: differs from eigensolver")
            bad = O.support_violations(h)
            if bad:
                failures.append(f"{p} {mu}: {bad[0]}")
            for j, ev in enumerate(h.eigenvalues, start=1):
                if cherednik_d(p, j, h.poly) != h.poly.scale(ev):
                    failures.append(f"{p} {mu}: eigen equation d_{j}")
    report(2, "Rodrigues formula vs eigensolver, monic, triangular, eigen", failures,
           f"{count} labels")


def test_criterion_3_exchange_expansion(report):
    failures, count = [], 0
    for p in GENERIC:
        for mu in _compositions(4, 5):
            N = len(mu)
            h = C.nonsym_poly(p, mu).poly
            for j in range(1, N):
                count += 1
                cs, co = C.k_action_expand(p, mu, j)
                other = C.nonsym_poly(p, weyl.simple_reflection(mu, j)).poly
                if exchange(h, j, j + 1) != h.scale(cs) + other.scale(co):
                    failures.append(f"{p} {mu} K_{j}")
    report(3, "exchange action reproduced by expansion coefficients", failures,
           f"{count} cases")


def _rel_err(x, y):
    return abs(x - y) / abs(y)


def test_criterion_4_quadrature(report):
    failures, grams = [], 0
    worst = mpmath.mpf(0)
    points = [Params("A", a, 0, w) for a in (1, 2) for w in ("1/2", 1)]
    points += [Params("B", a, b, w) for a in (1, 2) for b in (0, 1) for w in ("1/2", 1)]
    with mpmath.workdps(PRECISION):
        for p in points:
            for N in (1, 2, 3):
                # nonsymmetric basis
                labels = list(weyl.compositions_upto(N, 4))
                polys = [C.nonsym_poly(p, mu).poly for mu in labels]
                G = O.quadrature_gram(p, polys, PRECISION, labels=labels)
                grams += 1
                off = G.max_offdiag_ratio()
                worst = max(worst, off)
                if off > GRAM_TOL:
                    failures.append(f"{p} N={N}: off-diagonal ratio {mpmath.nstr(off, 5)}")
                d = G.diagonal()
                i0 = labels.index((0,) * N)
                for i, mu in enumerate(labels):
                    exact = Nm.norm_ratio_nonsym(p, mu).value
                    err = _rel_err(d[i] / d[i0], mpmath.mpf(exact.numerator) / exact.denominator)
                    worst = max(worst, err)
                    if err > GRAM_TOL:
                        failures.append(f"{p} {mu}: nonsym norm rel err {mpmath.nstr(err, 5)}")
                # symmetric and antisymmetric sectors
                sym_labels = [(mu, s) for mu in weyl.partitions_upto(N, 4) for s in _sectors(p, mu)]
                if N == 1:
                    # both sectors are the same polynomial in one variable
                    sym_labels = [(mu, s) for mu, s in sym_labels if s > 0]
                polys = [C.sym_poly(p, mu, s).poly for mu, s in sym_labels]
                polys.append(C.nonsym_poly(p, (0,) * N).poly)
                G = O.quadrature_gram(p, polys, PRECISION)
                grams += 1
                d = G.diagonal()
                n = len(sym_labels)
                # opposite sectors and distinct labels are orthogonal
                scale = min(d)
                for i, j in itertools.combinations(range(n), 2):
                    r = abs(G.matrix[i][j]) / scale
                    worst = max(worst, r)
                    if r > GRAM_TOL:
                        failures.append(f"{p} {sym_labels[i]}~{sym_labels[j]}: {mpmath.nstr(r, 5)}")
                for i, (mu, s) in enumerate(sym_labels):
                    exact = Nm.norm_ratio_sym(p, mu, s).value
                    err = _rel_err(d[i] / d[n], mpmath.mpf(exact.numerator) / exact.denominator)
                    worst = max(worst, err)
                    if err > GRAM_TOL:
                        failures.append(f"{p} {mu}{'+' if s > 0 else '-'}: sym norm rel err {mpmath.nstr(err, 5)}")
    report(4, "orthogonality and norms vs Gauss-Hermite quadrature", failures,
           f"{grams} Gram matrices, worst {mpmath.nstr(worst, 3)} <= 1e-25")


def test_criterion_5_symmetric_norm_consistency(report):
    failures, count = [], 0
    for p in GENERIC:
        for N in range(1, 5):
            for mu_plus in weyl.partitions_upto(N, 6):
                for s in _sectors(p, mu_plus):
                    count += 1
                    total = mpq(0)
                    for nu, _ in weyl.weyl_orbit(mu_plus):
                        b = C.sym_coeff(p, mu_plus, nu, s)
                        total += b * b * Nm.norm_ratio_nonsym(p, nu).value
                    if total != Nm.norm_ratio_sym(p, mu_plus, s).value:
                        failures.append(f"{p} {mu_plus} sign {s:+d}")
    report(5, "symmetric norms equal weighted orbit sums", failures, f"{count} sectors")


def test_criterion_6_poincare_macdonald(report):
    failures, count = [], 0
    for p in GENERIC:
        for N in range(1, 5):
            for mu in weyl.partitions_upto(N, 6):
                # the minus sign needs distinct parts, otherwise the right side has a pole
                signs = (1, -1) if len(set(mu)) == N else (1,)
                for s in signs:
                    count += 1
                    lhs, rhs = Nm.poincare_identity_check(N, mu, p, s)
                    if lhs != rhs:
                        failures.append(f"Poincare {p} {mu} {s:+d}")
    rng = random.Random(7)
    tq = []
    while len(tq) < 5:
        t = mpq(rng.randint(2, 19), rng.randint(2, 19))
        q = mpq(rng.randint(2, 19), rng.randint(2, 19))
        if t != 1 and q != 1:
            tq.append((t, q))
    for a in (1, 2, 3):
        p = Params("A", a)
        for N in range(1, 4):
            for mu in weyl.partitions_upto(N, 6):
                for t, q in tq:
                    cases = [q ** a]
                    if len(set(mu)) == N:
                        cases.append(t)
                    for tv in cases:
                        count += 1
                        lhs, rhs = Nm.macdonald_identity_check(N, mu, p, tv, q)
                        if lhs != rhs:
                            failures.append(f"Macdonald a={a} {mu} t={tv} q={q}")
    for N in range(1, 5):
        count += 1
        if sum(weyl.poincare_polynomial(N)) != math.factorial(N):
            failures.append(f"W(1) != {N}!")
    report(6, "Poincare and Macdonald orbit-sum identities, W(1) = N!", failures,
           f"{count} checks")


def test_criterion_7_parameter_shift(report):
    failures, count = [], 0
    for p in GENERIC:
        for N in range(1, 4):
            for mu in weyl.partitions_upto(N, 4):
                if p.is_B and any(m % 2 for m in mu):
                    continue
                for rel in C.parameter_shift_check(p, mu):
                    count += 1
                    if not rel.equal:
                        failures.append(f"{p} {mu}: {rel.name}")
    report(7, "parameter-shift and difference-product relations", failures,
           f"{count} relations")


def test_criterion_8_sectors_and_energy(report):
    failures, count = [], 0
    for p in GENERIC:
        for N in range(1, 5):
            for mu in weyl.partitions_upto(N, 5):
                for s in _sectors(p, mu):
                    H = C.sym_poly(p, mu, s).poly
                    for j in range(1, N):
                        count += 1
                        if exchange(H, j, j + 1) != H.scale(s):
                            failures.append(f"{p} {mu} K_{j} sign {s:+d}")
                    if p.is_B:
                        for j in range(1, N + 1):
                            count += 1
                            if reflect(H, j) != H.scale((-1) ** mu[j - 1]):
                                failures.append(f"{p} {mu} t_{j}")
        for mu in _compositions(4, 5):
            count += 1
            h = C.nonsym_poly(p, mu).poly
            if hamiltonian_apply(p, h) != h.scale(p.omega * sum(mu)):
                failures.append(f"{p} {mu}: energy")
    report(8, "symmetry sectors and Hamiltonian eigenvalues", failures, f"{count} checks")
