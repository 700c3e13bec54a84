"""Monic non-symmetric and (anti-)symmetric Hermite/Laguerre polynomials.

``h_mu`` is built by the column-type Rodrigues formula: the raising operator
``A_{mu+}^dagger`` applied to ``1`` gives ``h_{mu+}`` up to its top
coefficient, and braid operators then walk down the orbit of ``mu+`` one
simple reflection at a time.  Results are cached per ``(params, mu)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from gmpy2 import mpq

from . import weyl
from .dunkl import braid_S, raising_A_mu_dagger
from .errors import InvalidSector, SingularParameter
from .exactpoly import Poly, monomial
from .params import Params

__all__ = [
    "LabeledPoly",
    "SymLabeledPoly",
    "eigenvalues",
    "raising_sign",
    "top_coeff_partition",
    "top_coeff_word",
    "k_action_expand",
    "braid_coeff",
    "nonsym_poly",
    "rodrigues",
    "check_sector",
    "sym_coeff",
    "sym_poly",
    "parameter_shift_check",
    "vandermonde",
]


@dataclass(frozen=True)
class LabeledPoly:
    """Monic joint eigenvector ``h_mu`` of the Cherednik operators."""

    poly: Poly
    label: tuple
    params: Params
    eigenvalues: tuple
    provenance: dict = field(default_factory=dict, compare=False)

    @property
    def family(self):
        return self.params.family

    def to_dict(self):
        out = self.poly.to_dict()
        out.update(
            label=list(self.label),
            family=self.family,
            params=self.params.to_dict(),
            eigenvalues=[_rat_str(v) for v in self.eigenvalues],
        )
        if self.provenance:
            out["provenance"] = {k: _rat_str(v) for k, v in self.provenance.items()}
        return out


@dataclass(frozen=True)
class SymLabeledPoly:
    """Symmetric (``sign=+1``) or anti-symmetric (``sign=-1``) ``H_mu``."""

    poly: Poly
    label: tuple
    params: Params
    sign: int
    coefficients: dict = field(default_factory=dict, compare=False)

    @property
    def family(self):
        return self.params.family

    @property
    def symmetry(self):
        return "symmetric" if self.sign > 0 else "antisymmetric"

    def to_dict(self):
        out = self.poly.to_dict()
        out.update(
            label=list(self.label),
            family=self.family,
            params=self.params.to_dict(),
            symmetry=self.symmetry,
            coefficients=[
                {"mu": list(mu), "b": _rat_str(b)} for mu, b in sorted(self.coefficients.items())
            ],
        )
        return out


def _rat_str(v):
    v = mpq(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# ---------------------------------------------------------------------------
# spectra and coefficients
# ---------------------------------------------------------------------------
def eigenvalues(params: Params, mu):
    """Eigenvalues of ``d_1, ..., d_N`` on ``h_mu``."""
    mu = weyl.as_composition(mu)
    N = len(mu)
    if params.family == "A":
        shift = weyl.w_mu_apply(mu, tuple(params.a * x for x in weyl.delta(N)))
    else:
        shift = weyl.w_mu_apply(mu, weyl.rho_k_B(N, params.a, params.b))
    return tuple(m + s for m, s in zip(mu, shift))


def _rho_scale(params):
    return params.a if params.family == "A" else 2 * params.a


def _parity_factor(params, m):
    # a for family A; a (1 + (-1)^m) for family B
    if params.family == "A":
        return params.a
    return 2 * params.a if m % 2 == 0 else mpq(0)


def _step_pairing(params, mu, j):
    """``(<alpha_j, mu>, <alpha_j^vee, mu + a rho(mu)>)`` (``2a`` for family B)."""
    N = len(mu)
    rho_mu = weyl.w_mu_apply(mu, weyl.rho(N))
    m = mu[j - 1] - mu[j]
    X = m + _rho_scale(params) * (rho_mu[j - 1] - rho_mu[j])
    return m, X


def _nonzero(X, what):
    if not X:
        raise SingularParameter(f"vanishing pairing {what}", pairing=what)
    return X


def raising_sign(mu_plus) -> int:
    """Sign of the top coefficient of ``A_mu^dagger 1`` relative to ``c_mu``.

    Each braid operator inside the raising operators contributes a negative
    factor, one per unit of ``sum_{alpha > 0} <alpha^vee, mu>``.
    """
    total = sum(weyl.pairing(r, mu_plus) for r in weyl.positive_roots(len(mu_plus)))
    return -1 if total % 2 else 1


def top_coeff_partition(params: Params, mu_plus) -> mpq:
    """``c_mu = prod_{alpha>0} prod_{l=1}^{<alpha^vee, mu>} (l + a <alpha^vee, rho>)``.

    Uses ``2a`` for family B.  The top coefficient of ``A_mu^dagger 1`` is
    ``raising_sign(mu) * c_mu``.
    """
    mu_plus = weyl.as_composition(mu_plus)
    if not weyl.is_partition(mu_plus):
        raise ValueError(f"{mu_plus} is not a partition")
    N = len(mu_plus)
    rh = weyl.rho(N)
    scale = _rho_scale(params)
    c = mpq(1)
    for root in weyl.positive_roots(N):
        m = weyl.pairing(root, mu_plus)
        h = weyl.pairing(root, rh)
        for l in range(1, m + 1):
            c *= l + scale * h
    return c


def top_coeff_word(params: Params, mu) -> mpq:
    """Top coefficient ``c_{w_mu}`` of ``S_{w_mu} h_{mu+}``, from the inversion set."""
    mu = weyl.as_composition(mu)
    mu_plus, word = weyl.sort_to_partition(mu)
    N = len(mu)
    rh = weyl.rho(N)
    scale = _rho_scale(params)
    c = mpq(1)
    for root in sorted(weyl.inversion_set(word)):
        m = weyl.pairing(root, mu_plus)
        X = _nonzero(m + scale * weyl.pairing(root, rh), f"<alpha^vee{root}, mu+ + a rho>")
        f = _parity_factor(params, m)
        c *= (X * X - f * f) / X
    if not c:
        raise SingularParameter(f"c_w vanishes for mu={mu}", pairing="c_w")
    return c


def k_action_expand(params: Params, mu, j):
    """``(c_self, c_other)`` with ``K_j h_mu = c_self h_mu + c_other h_{s_j mu}``."""
    mu = weyl.as_composition(mu)
    if not 1 <= j <= len(mu) - 1:
        raise IndexError(f"index {j} out of range 1..{len(mu) - 1}")
    m, X = _step_pairing(params, mu, j)
    if m == 0:
        return mpq(1), mpq(0)
    X = _nonzero(X, f"<alpha_{j}^vee, mu + a rho(mu)> at mu={mu}")
    f = _parity_factor(params, m)
    if m < 0:
        return f / X, mpq(1)
    return f / X, 1 - f * f / (X * X)


def braid_coeff(params: Params, mu, j) -> mpq:
    """Coefficient ``s`` with ``S_j h_mu = s h_{s_j mu}`` (zero when ``s_j mu = mu``)."""
    mu = weyl.as_composition(mu)
    m, X = _step_pairing(params, mu, j)
    if m == 0:
        return mpq(0)
    if m < 0:
        return X
    X = _nonzero(X, f"<alpha_{j}^vee, mu + a rho(mu)> at mu={mu}")
    f = _parity_factor(params, m)
    return (X * X - f * f) / X


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------
_cache: dict = {}
_cache_lock = threading.Lock()


def clear_cache():
    with _cache_lock:
        _cache.clear()


def _cached(key, build):
    hit = _cache.get(key)
    if hit is not None:
        return hit
    value = build()
    with _cache_lock:
        return _cache.setdefault(key, value)


def _partition_poly(params, mu_plus):
    N = len(mu_plus)
    raw = raising_A_mu_dagger(params, mu_plus, Poly.constant(N, 1))
    c = raising_sign(mu_plus) * top_coeff_partition(params, mu_plus)
    return raw / c


def _nonsym(params, mu):
    mu_plus, word = weyl.sort_to_partition(mu)
    if not word.letters:
        return _cached((params, mu), lambda: _partition_poly(params, mu_plus))

    def build():
        prev = word.prefixes(mu_plus)[-2]
        j = word.letters[-1]
        coeff = braid_coeff(params, prev, j)
        if not coeff:
            raise SingularParameter(f"braid coefficient vanishes at {prev}, j={j}")
        return braid_S(params, j, _nonsym(params, prev)) / coeff

    return _cached((params, mu), build)


def nonsym_poly(params: Params, mu) -> LabeledPoly:
    """Monic non-symmetric polynomial ``h_mu`` with its Cherednik spectrum."""
    mu = weyl.as_composition(mu)
    poly = _nonsym(params, mu)
    mu_plus, _ = weyl.sort_to_partition(mu)
    provenance = {
        "c_mu_plus": raising_sign(mu_plus) * top_coeff_partition(params, mu_plus),
        "c_w_mu": top_coeff_word(params, mu),
    }
    return LabeledPoly(poly, mu, params, eigenvalues(params, mu), provenance)


def rodrigues(params: Params, mu, word=None, coeff_offset=0) -> Poly:
    """Uncached single-shot Rodrigues formula ``(c_w c_mu+)^{-1} S_w A_{mu+}^dagger 1``.

    ``word`` selects a reduced word for ``w_mu`` (default: the canonical one).
    ``coeff_offset`` is added to the partition coefficient; it exists only
    for fault-injection in the verification runner.
    """
    mu = weyl.as_composition(mu)
    mu_plus, canonical = weyl.sort_to_partition(mu)
    word = canonical if word is None else word
    if word.apply(mu_plus) != mu or not word.is_reduced():
        raise ValueError(f"word {word.letters} is not a reduced word for w_mu")
    N = len(mu)
    p = raising_A_mu_dagger(params, mu_plus, Poly.constant(N, 1))
    for j in word.letters:
        p = braid_S(params, j, p)
    c = raising_sign(mu_plus) * top_coeff_partition(params, mu_plus) + coeff_offset
    return p / (c * top_coeff_word(params, mu))


# ---------------------------------------------------------------------------
# symmetrization
# ---------------------------------------------------------------------------
def check_sector(family, mu_plus, sign):
    """Raise :class:`InvalidSector` unless ``mu_plus`` labels an ``H^sign``."""
    mu_plus = tuple(mu_plus)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not weyl.is_partition(mu_plus):
        raise InvalidSector(f"{mu_plus} is not a partition")
    strict = all(mu_plus[i] > mu_plus[i + 1] for i in range(len(mu_plus) - 1))
    if family == "A":
        if sign < 0 and not strict:
            raise InvalidSector(
                f"antisymmetric A-type labels must lie in P+ + delta (strictly decreasing); got {mu_plus}"
            )
        return
    parities = {m % 2 for m in mu_plus}
    if len(parities) != 1:
        raise InvalidSector(
            f"B-type (anti)symmetric labels need all-even or all-odd parts "
            f"(2P+ or 2P+ + 1^N); got {mu_plus}"
        )
    if sign < 0 and not strict:
        raise InvalidSector(
            f"antisymmetric B-type labels must lie in 2(P+ + delta) or 2(P+ + delta) + 1^N; got {mu_plus}"
        )


def sym_coeff(params: Params, mu_plus, mu, sign) -> mpq:
    """Coefficient of ``h_mu`` in ``H_{mu+}^sign``."""
    mu_plus = weyl.as_composition(mu_plus)
    mu = weyl.as_composition(mu, len(mu_plus))
    check_sector(params.family, mu_plus, sign)
    sorted_mu, word = weyl.sort_to_partition(mu)
    if sorted_mu != mu_plus:
        raise ValueError(f"{mu} is not in the orbit of {mu_plus}")
    N = len(mu)
    rh = weyl.rho(N)
    scale = _rho_scale(params)
    f = params.a if params.family == "A" else 2 * params.a
    b = mpq(1)
    for root in sorted(weyl.inversion_set(word)):
        X = _nonzero(
            weyl.pairing(root, mu_plus) + scale * weyl.pairing(root, rh),
            f"<alpha{root}, mu+ + a rho>",
        )
        b *= sign * (X - sign * f) / X
    return b


def sym_poly(params: Params, mu_plus, sign) -> SymLabeledPoly:
    """``H_{mu+}^sign = sum_{mu in W(mu+)} b_{mu+ mu} h_mu``."""
    mu_plus = weyl.as_composition(mu_plus)
    check_sector(params.family, mu_plus, sign)
    N = len(mu_plus)
    total = Poly.zero(N)
    coeffs = {}
    for mu, _ in weyl.weyl_orbit(mu_plus):
        b = sym_coeff(params, mu_plus, mu, sign)
        coeffs[mu] = b
        total = total + _nonsym(params, mu).scale(b)
    return SymLabeledPoly(total, mu_plus, params, sign, coeffs)


def vandermonde(N, squared=False) -> Poly:
    """``prod_{i<j} (x_i - x_j)``, or ``prod_{i<j} (x_i^2 - x_j^2)`` if ``squared``."""
    out = Poly.constant(N, 1)
    p = 2 if squared else 1
    for i in range(N):
        for j in range(i + 1, N):
            ei = [0] * N
            ej = [0] * N
            ei[i] = p
            ej[j] = p
            out = out * (monomial(ei) - monomial(ej))
    return out


def _x_product(N):
    return monomial((1,) * N)


@dataclass(frozen=True)
class ShiftRelation:
    name: str
    equal: bool
    difference: Poly


def parameter_shift_check(params: Params, mu):
    """Compare both sides of the difference-product / parameter-shift relations.

    Family A (``mu`` in P+): ``Delta H^+_mu(a+1) == H^-_{mu+delta}(a)``.
    Family B (``mu`` in 2P+): the chain
    ``D1 D2 H^+_mu(a+1, b+1) == D2 H^-_{mu+2delta}(a, b+1)
    == D1 H^+_{mu+1^N}(a+1, b) == H^-_{mu+2delta+1^N}(a, b)``
    with ``D1 = prod (x_i^2 - x_j^2)`` and ``D2 = prod x_i``.
    Returns a list of :class:`ShiftRelation`.
    """
    mu = weyl.as_composition(mu)
    N = len(mu)
    if not weyl.is_partition(mu):
        raise InvalidSector(f"{mu} is not a partition")
    dlt = [int(x) for x in weyl.delta(N)]
    if params.family == "A":
        lhs = vandermonde(N) * sym_poly(params.shifted(da=1), mu, 1).poly
        rhs = sym_poly(params, tuple(m + d for m, d in zip(mu, dlt)), -1).poly
        return [ShiftRelation("Delta H+(a+1) = H-_{mu+delta}(a)", lhs == rhs, lhs - rhs)]
    if any(m % 2 for m in mu):
        raise InvalidSector(f"B-type shift relations need mu in 2P+; got {mu}")
    d1, d2 = vandermonde(N, squared=True), _x_product(N)
    mu_2d = tuple(m + 2 * d for m, d in zip(mu, dlt))
    mu_1 = tuple(m + 1 for m in mu)
    mu_2d1 = tuple(m + 1 for m in mu_2d)
    sides = [
        ("D1 D2 H+_mu(a+1,b+1)", d1 * d2 * sym_poly(params.shifted(1, 1), mu, 1).poly),
        ("D2 H-_{mu+2delta}(a,b+1)", d2 * sym_poly(params.shifted(0, 1), mu_2d, -1).poly),
        ("D1 H+_{mu+1^N}(a+1,b)", d1 * sym_poly(params.shifted(1, 0), mu_1, 1).poly),
        ("H-_{mu+2delta+1^N}(a,b)", sym_poly(params, mu_2d1, -1).poly),
    ]
    out = []
    for (n1, p1), (n2, p2) in zip(sides, sides[1:]):
        out.append(ShiftRelation(f"{n1} = {n2}", p1 == p2, p1 - p2))
    return out
