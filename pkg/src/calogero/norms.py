"""Closed-form squared norms, as exact ratios to ``<h_0, h_0>``.

Every Gamma function in the norm formulas sits at an integer offset from
one appearing in the ground-state norm, so each ratio collapses to a finite
rational product (:func:`gamma_quotient`).  Absolute values need Gamma at
non-integer points and powers of pi; :func:`base_norm_float` supplies them
with mpmath.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import mpmath
from gmpy2 import mpq

from . import weyl
from .construct import check_sector
from .errors import IrrationalExponent, PoleEncountered, SingularParameter
from .exactpoly import Q
from .params import Params

__all__ = [
    "NormRatio",
    "gamma_ratio",
    "gamma_quotient",
    "orbit_factor",
    "orbit_factor_along_word",
    "norm_ratio_nonsym",
    "norm_ratio_sym",
    "base_norm_float",
    "absolute_norm_float",
    "poincare_identity_check",
    "macdonald_identity_check",
]


@dataclass(frozen=True)
class NormRatio:
    """``<p, p> / <h_0, h_0>`` for ``p = h_mu`` (``sign=None``) or ``H_mu^sign``."""

    value: mpq
    family: str
    params: Params
    label: tuple
    sign: Optional[int] = None

    def __float__(self):
        return float(self.value)

    def as_row(self):
        row = {
            "family": self.family,
            "N": len(self.label),
            "mu": ",".join(map(str, self.label)),
            "ratio_num": str(self.value.numerator),
            "ratio_den": str(self.value.denominator),
        }
        if self.sign is not None:
            row["sign"] = "+" if self.sign > 0 else "-"
        return row


def gamma_ratio(x0, n: int) -> mpq:
    """``Gamma(x0 + n) / Gamma(x0)`` as an exact rational; ``n`` may be negative."""
    x0 = Q(x0)
    n = int(n)
    out = mpq(1)
    if n >= 0:
        for k in range(n):
            f = x0 + k
            if not f:
                raise PoleEncountered(f"Gamma pole at {x0 + n}")
            out *= f
        return out
    for k in range(1, -n + 1):
        f = x0 - k
        if not f:
            raise PoleEncountered(f"Gamma pole at {f}")
        out /= f
    return out


def gamma_quotient(num_args, den_args) -> mpq:
    """``prod Gamma(num) / prod Gamma(den)`` when the arguments pair off at integer offsets."""
    den = [Q(x) for x in den_args]
    out = mpq(1)
    for x in (Q(v) for v in num_args):
        for i, y in enumerate(den):
            diff = x - y
            if diff.denominator == 1:
                out *= gamma_ratio(y, int(diff))
                del den[i]
                break
        else:
            raise ValueError(f"no integer-offset partner for Gamma({x})")
    if den:
        raise ValueError("unbalanced Gamma quotient")
    return out


# ---------------------------------------------------------------------------
# non-symmetric norms
# ---------------------------------------------------------------------------
def _scale(params):
    return params.a if params.family == "A" else 2 * params.a


def _parity(params, m):
    if params.family == "A":
        return params.a
    return 2 * params.a if m % 2 == 0 else mpq(0)


def _orbit_term(params, X, m, where):
    f = _parity(params, m)
    denom = X * X - f * f
    if not denom:
        raise SingularParameter(f"vanishing orbit-factor denominator at {where}", pairing=where)
    return X * X / denom


def orbit_factor(params: Params, mu) -> mpq:
    """``<h_mu, h_mu> / <h_{mu+}, h_{mu+}>`` from the inversion set of ``w_mu``."""
    mu = weyl.as_composition(mu)
    mu_plus, word = weyl.sort_to_partition(mu)
    rh = weyl.rho(len(mu))
    s = _scale(params)
    out = mpq(1)
    for root in weyl.inversion_set(word):
        m = weyl.pairing(root, mu_plus)
        out *= _orbit_term(params, m + s * weyl.pairing(root, rh), m, root)
    return out


def orbit_factor_along_word(params: Params, mu, word: weyl.ReducedWord) -> mpq:
    """Same ratio, accumulated step by step along the chain of ``word``."""
    mu = weyl.as_composition(mu)
    mu_plus, _ = weyl.sort_to_partition(mu)
    if word.apply(mu_plus) != mu or not word.is_reduced():
        raise ValueError(f"{word.letters} is not a reduced word for w_mu")
    N = len(mu)
    s = _scale(params)
    out = mpq(1)
    chain = word.prefixes(mu_plus)
    for nu, j in zip(chain, word.letters):
        rho_nu = weyl.w_mu_apply(nu, weyl.rho(N))
        m = nu[j - 1] - nu[j]
        X = m + s * (rho_nu[j - 1] - rho_nu[j])
        out *= _orbit_term(params, X, m, (j, nu))
    return out


def _variable_factor(params, mu_plus):
    """Per-coordinate Gamma products relative to ``mu = 0``."""
    N = len(mu_plus)
    out = mpq(1)
    for i, m in enumerate(mu_plus, start=1):
        shift = params.a * (N - i)
        if params.family == "A":
            out *= gamma_ratio(shift + 1, m)
        else:
            out *= gamma_ratio(shift + params.b + mpq(1, 2), (m + 1) // 2)
            out *= gamma_ratio(shift + 1, m // 2)
    return out


def _root_factor_partition(params, mu_plus):
    a = params.a
    out = mpq(1)
    for root in weyl.positive_roots(len(mu_plus)):
        h = weyl.pairing(root, weyl.rho(len(mu_plus)))
        m = weyl.pairing(root, mu_plus)
        k = m if params.family == "A" else m // 2
        x0 = a * h
        out *= gamma_ratio(x0 + 1 + a, k) * gamma_ratio(x0 + 1 - a, k) / gamma_ratio(x0 + 1, k) ** 2
    return out


def _omega_power(params, deg):
    base = 2 * params.omega if params.family == "A" else params.omega
    return base ** (-deg)


def norm_ratio_nonsym(params: Params, mu) -> NormRatio:
    """Exact ``<h_mu, h_mu> / <h_0, h_0>``."""
    mu = weyl.as_composition(mu)
    mu_plus, _ = weyl.sort_to_partition(mu)
    value = (
        _omega_power(params, sum(mu))
        * _variable_factor(params, mu_plus)
        * _root_factor_partition(params, mu_plus)
        * orbit_factor(params, mu)
    )
    return NormRatio(value, params.family, params, mu)


# ---------------------------------------------------------------------------
# (anti-)symmetric norms
# ---------------------------------------------------------------------------
def norm_ratio_sym(params: Params, mu_plus, sign) -> NormRatio:
    """Exact ``<H_mu^sign, H_mu^sign> / <h_0, h_0>``."""
    mu_plus = weyl.as_composition(mu_plus)
    check_sector(params.family, mu_plus, sign)
    N = len(mu_plus)
    a = params.a
    rh = weyl.rho(N)
    value = mpq(math.factorial(N)) * _omega_power(params, sum(mu_plus))
    value *= _variable_factor(params, mu_plus)
    for root in weyl.positive_roots(N):
        h = weyl.pairing(root, rh)
        m = weyl.pairing(root, mu_plus)
        if params.family == "B":
            m //= 2  # sector rules make <alpha, mu> even
        x = m + a * h
        x0 = a * h
        num = [x + 1 - sign * a, x + sign * a, x0 + 1, x0 + 1]
        den = [x + 1, x, x0 + 1 + a, x0 + 1 - a]
        value *= gamma_quotient(num, den)
    return NormRatio(value, params.family, params, mu_plus, sign)


# ---------------------------------------------------------------------------
# absolute ground-state norm
# ---------------------------------------------------------------------------
def base_norm_float(params: Params, N: int, precision: int = 40):
    """``<h_0, h_0>`` as an mpmath float with ``precision`` decimal digits."""
    with mpmath.workdps(precision + 10):
        a = mpmath.mpf(params.a.numerator) / params.a.denominator
        b = mpmath.mpf(params.b.numerator) / params.b.denominator
        w = mpmath.mpf(params.omega.numerator) / params.omega.denominator
        prod = mpmath.mpf(1)
        for j in range(1, N + 1):
            prod *= mpmath.gamma(1 + j * a) / mpmath.gamma(1 + a)
            if params.family == "B":
                prod *= mpmath.gamma((j - 1) * a + b + mpmath.mpf(1) / 2)
        if params.family == "A":
            expo = mpmath.mpf(N) * (N * a + 1 - a) / 2
            value = (2 * mpmath.pi) ** (mpmath.mpf(N) / 2) / (2 * w) ** expo * prod
        else:
            expo = N * (N - 1) * a + N * (b + mpmath.mpf(1) / 2)
            value = prod / w ** expo
    return value


def absolute_norm_float(ratio: NormRatio, precision: int = 40):
    with mpmath.workdps(precision + 10):
        v = mpmath.mpf(ratio.value.numerator) / ratio.value.denominator
        out = v * base_norm_float(ratio.params, len(ratio.label), precision)
    return out


# ---------------------------------------------------------------------------
# orbit-sum identities
# ---------------------------------------------------------------------------
def _pairings(mu_plus, a):
    rh = weyl.rho(len(mu_plus))
    return {r: weyl.pairing(r, mu_plus) + a * weyl.pairing(r, rh) for r in weyl.positive_roots(len(mu_plus))}


def poincare_identity_check(N: int, mu, params: Params, sign: int):
    """Both sides of the orbit-sum identity used for the symmetric norms.

    ``sum_{nu in W(mu)} prod_{R_{w_nu}} (X -+ a)/(X +- a) = N! prod_{R+} X/(X +- a)``
    with ``X = <alpha^vee, mu + a rho>``.  For ``sign=-1`` the right side has a
    pole unless ``mu`` is strictly decreasing.
    """
    mu = weyl.as_composition(mu, N)
    if not weyl.is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    weyl.poincare_polynomial(N)  # enforces the enumeration bound
    a = params.a
    X = _pairings(mu, a)

    def ratio(num, den, where):
        if not den:
            raise PoleEncountered(f"pole at root {where} for mu={mu}, sign={sign:+d}")
        return num / den

    lhs = mpq(0)
    for _, word in weyl.weyl_orbit(mu):
        term = mpq(1)
        for r in weyl.inversion_set(word):
            term *= ratio(X[r] - sign * a, X[r] + sign * a, r)
        lhs += term
    rhs = mpq(math.factorial(N))
    for r, x in X.items():
        rhs *= ratio(x, x + sign * a, r)
    return lhs, rhs


def macdonald_identity_check(N: int, mu, params: Params, t_value=None, q_value=2):
    """Both sides of the ``(t, q)`` orbit-sum identity.

    ``sum_nu prod_{R_{w_nu}} t (1 - q^X/t) / (1 - t q^X)
    = W(t) prod_{R+} (1 - q^X) / (1 - t q^X)`` with ``X = <alpha^vee, mu + a rho>``.

    ``a`` must be an integer so that ``q^X`` is rational.  ``t_value=None``
    uses ``t = q^a``; the identity holds for arbitrary ``t`` only when ``mu``
    has distinct parts.
    """
    mu = weyl.as_composition(mu, N)
    if not weyl.is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    a = params.a
    if a.denominator != 1:
        raise IrrationalExponent(f"q^(m + a h) is not rational for a={a}")
    q = Q(q_value)
    if q == 0:
        raise PoleEncountered("q must be nonzero")
    t = q ** int(a) if t_value is None else Q(t_value)
    if t == 0:
        raise PoleEncountered("t must be nonzero")
    X = _pairings(mu, a)
    qX = {r: q ** int(x) for r, x in X.items()}

    def ratio(num, den, where):
        if not den:
            raise PoleEncountered(f"pole at root {where}: 1 - t q^X = 0")
        return num / den

    lhs = mpq(0)
    for _, word in weyl.weyl_orbit(mu):
        term = mpq(1)
        for r in weyl.inversion_set(word):
            term *= t * ratio(1 - qX[r] / t, 1 - t * qX[r], r)
        lhs += term
    w_t = sum(c * t**k for k, c in enumerate(weyl.poincare_polynomial(N)))
    rhs = mpq(w_t)
    for r in X:
        rhs *= ratio(1 - qX[r], 1 - t * qX[r], r)
    return lhs, rhs
