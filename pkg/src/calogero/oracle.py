"""Independent checks: triangular eigensolver, quadrature Gram matrices, batch runner.

The eigensolver never touches the raising or braid operators.  It writes the
Cherednik operators as matrices on monomials, which are triangular in the
``order_key`` ordering, and back-substitutes for the joint eigenvector.

The Gram matrices integrate against the squared ground state: family A uses
``prod |x_j - x_k|^{2a} exp(-omega |x|^2)`` and family B uses
``prod |x_j^2 - x_k^2|^{2a} prod |x_j|^{2b} exp(-omega |x|^2)``.
For integer couplings the prefactor is a polynomial, so a tensor-product
Gauss-Hermite rule with enough nodes is exact up to rounding.  The rule is
applied to each monomial, where it factorizes into one-dimensional sums.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
from gmpy2 import mpq

from . import construct, norms, weyl
from .dunkl import cherednik_d
from .errors import CalogeroError, DegenerateEigenvalue, NonIntegerCoupling
from .exactpoly import Poly, exchange, monomial, reflect
from .params import Params
from .relations import operator_relations

DEFAULT_PRECISION = 40


def default_precision() -> int:
    """Working precision in decimal digits (``CALOGERO_PRECISION`` overrides)."""
    value = os.environ.get("CALOGERO_PRECISION")
    return int(value) if value else DEFAULT_PRECISION


# ---------------------------------------------------------------------------
# operator matrices
# ---------------------------------------------------------------------------
def basis(N: int, cutoff: int):
    """Compositions of degree ``<= cutoff``, ascending in ``weyl.order_key``."""
    return sorted(weyl.compositions_upto(N, cutoff), key=weyl.order_key)


@dataclass(frozen=True)
class OperatorMatrix:
    """Matrix of a degree non-increasing operator on the monomial basis.

    ``rows[r]`` maps column index to the coefficient of ``x^basis[r]`` in the
    image of ``x^basis[col]``; the storage is sparse but :meth:`dense`
    returns the full square matrix.
    """

    basis: tuple
    rows: tuple
    name: str = ""

    @property
    def index(self):
        return {nu: i for i, nu in enumerate(self.basis)}

    def entry(self, row, col):
        return self.rows[row].get(col, mpq(0))

    def dense(self):
        n = len(self.basis)
        return [[self.entry(r, c) for c in range(n)] for r in range(n)]

    def triangularity_violations(self):
        """Nonzero entries ``(row, col)`` with ``row != col`` that break the order.

        Allowed: ``basis[row]`` precedes ``basis[col]`` or has lower degree.
        """
        bad = []
        for r, row in enumerate(self.rows):
            nu = self.basis[r]
            for c in row:
                if c == r:
                    continue
                mu = self.basis[c]
                if sum(nu) < sum(mu):
                    continue
                if sum(nu) == sum(mu) and weyl.precedes(nu, mu):
                    continue
                bad.append((nu, mu))
        return bad

    def is_triangular(self) -> bool:
        return not self.triangularity_violations()


def operator_matrix(apply, N: int, cutoff: int, name="") -> OperatorMatrix:
    """Matrix of the linear map ``apply`` (``Poly -> Poly``) on ``basis(N, cutoff)``."""
    bas = basis(N, cutoff)
    idx = {nu: i for i, nu in enumerate(bas)}
    rows = [dict() for _ in bas]
    for c, nu in enumerate(bas):
        for exp, v in apply(monomial(nu)).terms.items():
            if exp not in idx:
                raise ValueError(f"{name} raises degree beyond the cutoff at {nu}")
            rows[idx[exp]][c] = v
    return OperatorMatrix(tuple(bas), tuple(rows), name)


@lru_cache(maxsize=64)
def cherednik_matrices(params: Params, N: int, cutoff: int):
    return tuple(
        operator_matrix(lambda p, j=j: cherednik_d(params, j, p), N, cutoff, f"d{j}")
        for j in range(1, N + 1)
    )


def triangular_eigensolve(params: Params, mu, cutoff=None) -> Poly:
    """Monic joint eigenvector of ``d_1, ..., d_N`` with top monomial ``x^mu``.

    Back-substitution runs down the basis from ``mu``; each coefficient is
    solved from any ``d_j`` whose diagonal entry differs from the target
    eigenvalue.  Raises :class:`DegenerateEigenvalue` if none does.
    """
    mu = weyl.as_composition(mu)
    N = len(mu)
    cutoff = sum(mu) if cutoff is None else cutoff
    if cutoff < sum(mu):
        raise ValueError("cutoff below |mu|")
    mats = cherednik_matrices(params, N, cutoff)
    bas = mats[0].basis
    idx = mats[0].index
    top = idx[mu]
    lam = [m.entry(top, top) for m in mats]
    coeff = {top: mpq(1)}
    for r in range(top - 1, -1, -1):
        rhs = None
        for m, target in zip(mats, lam):
            pivot = m.entry(r, r) - target
            if not pivot:
                continue
            s = sum((v * coeff[c] for c, v in m.rows[r].items() if c in coeff), mpq(0))
            rhs = -s / pivot
            break
        if rhs is None:
            raise DegenerateEigenvalue(f"no pivot for {bas[r]} below {mu} at {params}")
        if rhs:
            coeff[r] = rhs
    poly = Poly(N, {bas[c]: v for c, v in coeff.items()})
    for j, m in enumerate(mats, start=1):
        if cherednik_d(params, j, poly) != poly.scale(lam[j - 1]):
            raise DegenerateEigenvalue(f"back-substitution failed the d{j} equation for {mu}")
    return poly


def support_violations(lp: construct.LabeledPoly):
    """Monomials of ``lp`` that break monicity, triangularity or B-parity."""
    mu = lp.label
    bad = []
    if lp.poly.coeff(mu) != 1:
        bad.append(("monic", mu))
    for nu in lp.poly.support():
        if nu == mu:
            continue
        if not (sum(nu) < sum(mu) or weyl.precedes(nu, mu)):
            bad.append(("order", nu))
        if lp.family == "B" and any((x - y) % 2 for x, y in zip(nu, mu)):
            bad.append(("parity", nu))
    return bad


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------
@lru_cache(maxsize=None)
def gauss_hermite(n: int, dps: int):
    """Nodes and weights for ``int f(y) exp(-y^2) dy`` at ``dps`` digits."""
    with mpmath.workdps(dps):
        X, W = mpmath.gauss_quadrature(n, "hermite")
        return tuple(X), tuple(W)


def weight_polynomial(params: Params, N: int) -> Poly:
    """Polynomial prefactor of the squared ground state (integer couplings only)."""
    a, b = params.a, params.b
    if a.denominator != 1 or (params.is_B and b.denominator != 1):
        raise NonIntegerCoupling(f"quadrature needs integer couplings, got {params}")
    if not params.is_B:
        return construct.vandermonde(N) ** (2 * int(a))
    w = construct.vandermonde(N, squared=True) ** (2 * int(a))
    return w * monomial((2 * int(b),) * N)


def _axis_degree(p: Poly):
    if not p.terms:
        return [0] * p.N
    return [max(e[i] for e in p.terms) for i in range(p.N)]


@dataclass(frozen=True)
class GramMatrix:
    """``G[i][j] = <p_i, p_j>`` as mpmath floats, with quadrature metadata."""

    matrix: tuple
    labels: tuple
    params: Params
    nodes: int
    precision: int
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.matrix)

    def diagonal(self):
        return [self.matrix[i][i] for i in range(len(self))]

    def max_offdiag_ratio(self):
        """``max |G_ij| (i != j) / min G_ii``."""
        n = len(self)
        if n < 2:
            return mpmath.mpf(0)
        off = max(abs(self.matrix[i][j]) for i in range(n) for j in range(n) if i != j)
        return off / min(self.diagonal())

    def symmetry_defect(self):
        n = len(self)
        return max(
            (abs(self.matrix[i][j] - self.matrix[j][i]) for i in range(n) for j in range(n)),
            default=mpmath.mpf(0),
        )

    def to_dict(self, digits=None):
        digits = digits or self.precision

        def s(x):
            return mpmath.nstr(x, digits)

        return {
            "family": self.params.family,
            "params": self.params.to_dict(),
            "labels": [list(lab) if isinstance(lab, tuple) else lab for lab in self.labels],
            "nodes_per_axis": self.nodes,
            "precision": self.precision,
            "matrix": [[s(x) for x in row] for row in self.matrix],
        }


def _moment_table(params, n, dps, kmax):
    """``m_k = int x^k exp(-omega x^2) dx`` by an ``n``-point Gauss-Hermite rule."""
    X, W = gauss_hermite(n, dps)
    with mpmath.workdps(dps):
        w = mpmath.mpf(params.omega.numerator) / params.omega.denominator
        scale = 1 / mpmath.sqrt(w)
        out = []
        for k in range(kmax + 1):
            out.append(sum(wt * (x * scale) ** k for x, wt in zip(X, W)) * scale)
    return out


def _mpf(q):
    return mpmath.mpf(q.numerator) / q.denominator


def quadrature_gram(params: Params, polys, precision=None, nodes=None, labels=None) -> GramMatrix:
    """Gram matrix of ``polys`` under the weight of ``params`` (integer ``a``, ``b``).

    ``nodes`` defaults to the smallest per-axis count that integrates every
    integrand exactly.  Arithmetic runs ten digits above ``precision``.
    """
    polys = list(polys)
    if not polys:
        raise ValueError("no polynomials given")
    N = polys[0].N
    precision = precision or default_precision()
    dps = precision + 10
    wpoly = weight_polynomial(params, N)
    wdeg = _axis_degree(wpoly)
    pdeg = [max(col) for col in zip(*(_axis_degree(p) for p in polys))]
    need = max(w + 2 * d for w, d in zip(wdeg, pdeg))
    min_nodes = need // 2 + 1
    if nodes is None:
        nodes = min_nodes
    elif nodes < min_nodes:
        raise ValueError(f"{nodes} nodes per axis cannot integrate degree {need} exactly")
    moments = _moment_table(params, nodes, dps, need)
    with mpmath.workdps(dps):
        wterms = [(e, _mpf(c)) for e, c in wpoly.terms.items()]
        cache = {}

        def moment(g):
            # int x^g |phi|^2 dx, via the weight polynomial expansion
            v = cache.get(g)
            if v is None:
                v = mpmath.mpf(0)
                for e, c in wterms:
                    term = c
                    for k in range(N):
                        term *= moments[e[k] + g[k]]
                        if not term:
                            break
                    v += term
                cache[g] = v
            return v

        conv = [[(e, _mpf(c)) for e, c in p.terms.items()] for p in polys]
        n = len(polys)
        G = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                s = mpmath.mpf(0)
                for e, c in conv[i]:
                    for f, d in conv[j]:
                        s += c * d * moment(tuple(x + y for x, y in zip(e, f)))
                G[i][j] = G[j][i] = s
    labels = tuple(labels) if labels is not None else tuple(range(n))
    return GramMatrix(
        tuple(tuple(r) for r in G), labels, params, nodes, precision,
        {"integrand_axis_degree": need},
    )


def inner_product(params: Params, f: Poly, g: Poly, precision=None):
    """``<f, g>`` by quadrature (integer couplings)."""
    return quadrature_gram(params, [f, g], precision).matrix[0][1]


def nonsym_gram(params: Params, N: int, max_degree: int, precision=None) -> GramMatrix:
    """Gram matrix of ``h_mu`` for all ``|mu| <= max_degree``."""
    mus = list(weyl.compositions_upto(N, max_degree))
    polys = [construct.nonsym_poly(params, mu).poly for mu in mus]
    return quadrature_gram(params, polys, precision, labels=mus)


# ---------------------------------------------------------------------------
# batch verification
# ---------------------------------------------------------------------------
def _entry(check, params, N, status, detail):
    return {
        "check": check,
        "family": params.family,
        "N": N,
        "params": params.to_dict(),
        "status": status,
        "detail": detail,
    }


def _run(check, params, N, fn):
    """Run ``fn() -> list of failure payloads`` and wrap the outcome."""
    t0 = time.perf_counter()
    try:
        result = fn()
    except CalogeroError as exc:
        return _entry(check, params, N, "fail", {"error": type(exc).__name__, "message": str(exc)})
    if result is None:
        return _entry(check, params, N, "skipped", {"reason": "not applicable"})
    if isinstance(result, str):
        return _entry(check, params, N, "skipped", {"reason": result})
    elapsed = round(time.perf_counter() - t0, 3)
    if result:
        return _entry(check, params, N, "fail", {"failures": result[:5], "count": len(result)})
    return _entry(check, params, N, "pass", {"seconds": elapsed})


def verify_suite(params: Params, N: int, max_degree: int, precision=None, fault=None):
    """Run every invariant class and return a list of report entries.

    ``fault={"c_mu_offset": 1}`` perturbs the partition top coefficient in the
    Rodrigues-versus-eigensolver check, to confirm that the check can fail.
    """
    fault = fault or {}
    precision = precision or default_precision()
    mus = list(weyl.compositions_upto(N, max_degree))
    probes = [monomial(nu) for nu in mus]
    report = []

    def relations(group):
        def fn():
            bad = []
            for rel in operator_relations(params, N, groups=(group,), raising_bound=1):
                for f in probes:
                    diff = rel.difference(f)
                    if diff.terms:
                        bad.append({"relation": rel.name, "input": str(f), "difference": str(diff)})
                        break
            return bad
        return fn

    for group in ("commutation", "braid", "intertwining", "raising"):
        report.append(_run(f"relations:{group}", params, N, relations(group)))

    def triangular():
        bad = []
        for m in cherednik_matrices(params, N, max_degree):
            bad += [{"operator": m.name, "row": list(r), "col": list(c)}
                    for r, c in m.triangularity_violations()]
        return bad

    report.append(_run("triangularity", params, N, triangular))

    def rodrigues():
        offset = fault.get("c_mu_offset", 0)
        bad = []
        for mu in mus:
            if offset:
                built = construct.rodrigues(params, mu, coeff_offset=offset)
            else:
                built = construct.nonsym_poly(params, mu).poly
            solved = triangular_eigensolve(params, mu)
            if built != solved:
                bad.append({"mu": list(mu), "difference": str(built - solved)})
        return bad

    report.append(_run("rodrigues-vs-eigensolver", params, N, rodrigues))

    def eigen_and_support():
        bad = []
        for mu in mus:
            lp = construct.nonsym_poly(params, mu)
            for j in range(1, N + 1):
                if cherednik_d(params, j, lp.poly) != lp.poly.scale(lp.eigenvalues[j - 1]):
                    bad.append({"mu": list(mu), "operator": f"d{j}"})
            bad += [{"mu": list(mu), "kind": k, "monomial": list(nu)} for k, nu in support_violations(lp)]
        return bad

    report.append(_run("eigenvalues-and-support", params, N, eigen_and_support))

    def exchange_expansion():
        bad = []
        for mu in mus:
            h = construct.nonsym_poly(params, mu).poly
            for j in range(1, N):
                cs, co = construct.k_action_expand(params, mu, j)
                other = construct.nonsym_poly(params, weyl.simple_reflection(mu, j)).poly
                diff = exchange(h, j, j + 1) - h.scale(cs) - other.scale(co)
                if diff.terms:
                    bad.append({"mu": list(mu), "j": j, "difference": str(diff)})
        return bad

    report.append(_run("exchange-expansion", params, N, exchange_expansion))

    def sectors():
        bad = []
        for mp in weyl.partitions_upto(N, max_degree):
            for sign in (1, -1):
                try:
                    construct.check_sector(params.family, mp, sign)
                except CalogeroError:
                    continue
                H = construct.sym_poly(params, mp, sign).poly
                for j in range(1, N):
                    if exchange(H, j, j + 1) != H.scale(sign):
                        bad.append({"mu": list(mp), "sign": sign, "K": j})
                if params.is_B:
                    for j in range(1, N + 1):
                        if reflect(H, j) != H.scale(-1 if mp[j - 1] % 2 else 1):
                            bad.append({"mu": list(mp), "sign": sign, "t": j})
        return bad

    report.append(_run("symmetry-sectors", params, N, sectors))

    def norm_consistency():
        bad = []
        for mp in weyl.partitions_upto(N, max_degree):
            for sign in (1, -1):
                try:
                    closed = norms.norm_ratio_sym(params, mp, sign).value
                except CalogeroError:
                    continue
                total = sum(
                    (construct.sym_coeff(params, mp, mu, sign) ** 2 * norms.norm_ratio_nonsym(params, mu).value
                     for mu, _ in weyl.weyl_orbit(mp)),
                    mpq(0),
                )
                if total != closed:
                    bad.append({"mu": list(mp), "sign": sign, "closed": str(closed), "orbit_sum": str(total)})
        return bad

    report.append(_run("symmetric-norm-consistency", params, N, norm_consistency))

    def gram():
        try:
            weight_polynomial(params, N)
        except NonIntegerCoupling:
            return "non-integer couplings: quadrature oracle not applicable"
        G = nonsym_gram(params, N, max_degree, precision)
        tol = mpmath.mpf(10) ** (-(precision - 15))
        bad = []
        ratio = G.max_offdiag_ratio()
        if ratio > tol:
            bad.append({"offdiag_ratio": mpmath.nstr(ratio, 5)})
        d0 = G.matrix[0][0]
        for i, mu in enumerate(G.labels):
            exact = _mpf(norms.norm_ratio_nonsym(params, mu).value)
            got = G.matrix[i][i] / d0
            if abs(got / exact - 1) > tol:
                bad.append({"mu": list(mu), "quadrature": mpmath.nstr(got, 20), "closed": mpmath.nstr(exact, 20)})
        return bad

    report.append(_run("norms-vs-gram", params, N, gram))

    def poincare():
        if params.is_B:
            return None
        bad = []
        for mp in weyl.partitions_upto(N, max_degree):
            for sign in (1, -1):
                if sign < 0 and len(set(mp)) < N:
                    continue
                lhs, rhs = norms.poincare_identity_check(N, mp, params, sign)
                if lhs != rhs:
                    bad.append({"mu": list(mp), "sign": sign, "lhs": str(lhs), "rhs": str(rhs)})
        return bad

    report.append(_run("poincare-identity", params, N, poincare))

    def shifts():
        bad = []
        for mp in weyl.partitions_upto(N, max_degree):
            if params.is_B and any(m % 2 for m in mp):
                continue
            for rel in construct.parameter_shift_check(params, mp):
                if not rel.equal:
                    bad.append({"mu": list(mp), "relation": rel.name, "difference": str(rel.difference)})
        return bad

    report.append(_run("parameter-shift", params, N, shifts))
    return report


def report_ok(report) -> bool:
    return all(entry["status"] != "fail" for entry in report)
