"""Dunkl, Cherednik, Knop-Sahi, braid and raising operators.

All operators act on :class:`~calogero.exactpoly.Poly` values.  The Dunkl and
Cherednik operators are linear, so their images are computed once per
monomial and cached per ``(params, index, exponent)``; applying them to a
polynomial is then a sparse linear combination of cached images.

:class:`Operator` wraps any such map and supports composition (``@``), sums,
scalar multiples and powers, which is how the operator identities are
written in the test-suite::

    lhs = d(p, 1) @ K(1) - K(1) @ d(p, 2)
    assert lhs(f) == p.a * f
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from .exactpoly import (
    Poly,
    Q,
    diffquot_minus,
    diffquot_plus,
    diffquot_reflect,
    exchange,
    partial,
    reflect,
    reflect_power,
)
from .params import Params

_ZERO = mpq(0)


def _apply_monomialwise(image, p: Poly, *key) -> Poly:
    out = {}
    for exp, c in p.terms.items():
        for e, v in image(*key, exp).items():
            s = out.get(e, _ZERO) + c * v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return Poly._raw(p.N, out)


def _mono(N, exp):
    return Poly._raw(N, {exp: mpq(1)})


# ---------------------------------------------------------------------------
# Dunkl operators
# ---------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _dunkl_image(params: Params, N: int, j: int, exp) -> dict:
    m = _mono(N, exp)
    out = partial(m, j)
    for k in range(1, N + 1):
        if k == j:
            continue
        out = out + diffquot_minus(m, j, k).scale(params.a)
        if params.is_B:
            out = out + diffquot_plus(m, j, k).scale(params.a)
    if params.is_B and params.b:
        out = out + diffquot_reflect(m, j).scale(params.b)
    return out.terms


def dunkl_apply(params: Params, j: int, p: Poly) -> Poly:
    """Dunkl operator ``nabla_j`` of the family in ``params``."""
    if not 1 <= j <= p.N:
        raise IndexError(f"index {j} out of range 1..{p.N}")
    return _apply_monomialwise(_dunkl_image, p, params, p.N, j)


def alpha(params: Params, l: int, p: Poly) -> Poly:
    """Annihilation-like operator ``nabla_l / (2 omega)``."""
    return dunkl_apply(params, l, p).scale(1 / (2 * params.omega))


def alpha_dagger(params: Params, l: int, p: Poly) -> Poly:
    """Creation-like operator ``x_l - nabla_l / (2 omega)``."""
    return Poly.variable(p.N, l) * p - alpha(params, l, p)


# ---------------------------------------------------------------------------
# Cherednik operators
# ---------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _cherednik_image(params: Params, N: int, j: int, exp) -> dict:
    m = _mono(N, exp)
    grad = dunkl_apply(params, j, m)
    # 2 omega alpha^dagger alpha = x_j nabla_j - nabla_j^2 / (2 omega)
    out = Poly.variable(N, j) * grad - dunkl_apply(params, j, grad).scale(1 / (2 * params.omega))
    for k in range(j + 1, N + 1):
        swapped = exchange(m, j, k)
        out = out + swapped.scale(params.a)
        if params.is_B:
            out = out + reflect(reflect(swapped, j), k).scale(params.a)
    if params.is_B and params.b:
        out = out + reflect(m, j).scale(params.b)
    return out.terms


def cherednik_d(params: Params, j: int, p: Poly) -> Poly:
    """Cherednik operator ``d_j``."""
    if not 1 <= j <= p.N:
        raise IndexError(f"index {j} out of range 1..{p.N}")
    return _apply_monomialwise(_cherednik_image, p, params, p.N, j)


def cherednik_weighted(params: Params, lam, p: Poly) -> Poly:
    """``d^lambda = sum_j lambda_j d_j`` for integral ``lambda``."""
    if len(lam) != p.N:
        raise ValueError("lambda has wrong length")
    coeffs = []
    for x in lam:
        q = Q(x)
        if q.denominator != 1:
            raise ValueError(f"lambda must be integral, got {x}")
        coeffs.append(q)
    out = Poly.zero(p.N)
    for j, c in enumerate(coeffs, start=1):
        if c:
            out = out + cherednik_d(params, j, p).scale(c)
    return out


def hamiltonian_apply(params: Params, p: Poly) -> Poly:
    """Transformed Hamiltonian, written through the Cherednik operators."""
    N = p.N
    shift = params.a * (N - 1) / 2 if params.family == "A" else params.a * (N - 1) + params.b
    total = Poly.zero(N)
    for l in range(1, N + 1):
        total = total + cherednik_d(params, l, p)
    return (total - p.scale(N * shift)).scale(params.omega)


# ---------------------------------------------------------------------------
# Knop-Sahi, braid and raising operators
# ---------------------------------------------------------------------------
def _K(p, j):
    return exchange(p, j, j + 1)


def knop_sahi_e(params: Params, p: Poly) -> Poly:
    """``e = alpha_1 K_1 K_2 ... K_{N-1}``."""
    for j in range(p.N - 1, 0, -1):
        p = _K(p, j)
    return alpha(params, 1, p)


def knop_sahi_e_dagger(params: Params, p: Poly) -> Poly:
    """``e^dagger = K_{N-1} ... K_2 K_1 alpha_1^dagger``."""
    p = alpha_dagger(params, 1, p)
    for j in range(1, p.N):
        p = _K(p, j)
    return p


def braid_S(params: Params, j: int, p: Poly) -> Poly:
    """``S_j = [K_j, d_j]``."""
    if not 1 <= j <= p.N - 1:
        raise IndexError(f"braid index {j} out of range 1..{p.N - 1}")
    return _K(cherednik_d(params, j, p), j) - cherednik_d(params, j, _K(p, j))


def raising_A_dagger(params: Params, j: int, p: Poly) -> Poly:
    """``A_j^dagger = (S_j S_{j+1} ... S_{N-1} e^dagger)^j``."""
    N = p.N
    if not 1 <= j <= N:
        raise IndexError(f"index {j} out of range 1..{N}")
    for _ in range(j):
        p = knop_sahi_e_dagger(params, p)
        for k in range(N - 1, j - 1, -1):
            p = braid_S(params, k, p)
    return p


def raising_A_mu_dagger(params: Params, mu_plus, p: Poly) -> Poly:
    """``A_mu^dagger = (A_1^dagger)^{mu_1-mu_2} ... (A_N^dagger)^{mu_N}``."""
    N = p.N
    mu = tuple(mu_plus)
    if len(mu) != N or any(mu[i] < mu[i + 1] for i in range(N - 1)) or min(mu) < 0:
        raise ValueError(f"{mu_plus} is not a partition with {N} parts")
    ext = mu + (0,)
    # rightmost factor acts first
    for j in range(N, 0, -1):
        for _ in range(ext[j - 1] - ext[j]):
            p = raising_A_dagger(params, j, p)
    return p


def clear_caches():
    """Drop all cached monomial images."""
    _dunkl_image.cache_clear()
    _cherednik_image.cache_clear()


# ---------------------------------------------------------------------------
# Operator algebra
# ---------------------------------------------------------------------------
class Operator:
    """A linear map on polynomials, closed under ``@``, ``+``, ``-`` and scaling.

    Adding a scalar ``c`` means adding ``c`` times the identity.
    """

    __slots__ = ("fn", "name")

    def __init__(self, fn, name="op"):
        self.fn = fn
        self.name = name

    def __call__(self, p: Poly) -> Poly:
        return self.fn(p)

    def __repr__(self):
        return f"Operator({self.name})"

    @staticmethod
    def _lift(other):
        if isinstance(other, Operator):
            return other
        c = Q(other)
        return Operator(lambda p: p.scale(c), str(other))

    def __matmul__(self, other):
        other = self._lift(other)
        return Operator(lambda p: self.fn(other.fn(p)), f"{self.name}*{other.name}")

    def __add__(self, other):
        other = self._lift(other)
        return Operator(lambda p: self.fn(p) + other.fn(p), f"({self.name}+{other.name})")

    __radd__ = __add__

    def __neg__(self):
        return Operator(lambda p: -self.fn(p), f"-{self.name}")

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, c):
        if isinstance(c, Operator):
            return self @ c
        c = Q(c)
        return Operator(lambda p: self.fn(p).scale(c), f"{c}*{self.name}")

    __rmul__ = __mul__

    def __pow__(self, n: int):
        def run(p):
            for _ in range(n):
                p = self.fn(p)
            return p

        return Operator(run, f"{self.name}^{n}")


def identity():
    return Operator(lambda p: p, "1")


def K(j, k=None):
    """Exchange ``K_jk`` (``K_j = K_{j,j+1}`` when ``k`` is omitted)."""
    k = j + 1 if k is None else k
    return Operator(lambda p: exchange(p, j, k), f"K{j}{k}")


def t(j):
    return Operator(lambda p: reflect(p, j), f"t{j}")


def t_pow(lam):
    return Operator(lambda p: reflect_power(p, lam), f"t^{tuple(lam)}")


def x(j):
    return Operator(lambda p: Poly.variable(p.N, j) * p, f"x{j}")


def nabla(params, j):
    return Operator(lambda p: dunkl_apply(params, j, p), f"nabla{j}")


def d(params, j):
    return Operator(lambda p: cherednik_d(params, j, p), f"d{j}")


def d_lam(params, lam):
    return Operator(lambda p: cherednik_weighted(params, lam, p), f"d^{tuple(lam)}")


def S(params, j):
    return Operator(lambda p: braid_S(params, j, p), f"S{j}")


def e(params):
    return Operator(lambda p: knop_sahi_e(params, p), "e")


def e_dagger(params):
    return Operator(lambda p: knop_sahi_e_dagger(params, p), "e+")


def A_dagger(params, j):
    return Operator(lambda p: raising_A_dagger(params, j, p), f"A{j}+")


def A_mu_dagger(params, mu_plus):
    return Operator(lambda p: raising_A_mu_dagger(params, mu_plus, p), f"A{tuple(mu_plus)}+")


def hamiltonian(params):
    return Operator(lambda p: hamiltonian_apply(params, p), "H")
