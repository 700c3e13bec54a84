"""Sparse multivariate polynomials over exact rationals.

A :class:`Poly` maps exponent tuples to nonzero :class:`gmpy2.mpq`
coefficients.  Besides the ring operations, this module provides the
exchange/reflection operators and the three divided differences from which
all Dunkl-type operators are assembled.  Every quotient is computed by
per-monomial telescoping, so results are always polynomials.

Variable indices in the public functions are 1-based, as in the formulas
(``x_1, ..., x_N``).
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

__all__ = [
    "Q",
    "Poly",
    "monomial",
    "exchange",
    "reflect",
    "reflect_power",
    "diffquot_minus",
    "diffquot_plus",
    "diffquot_reflect",
    "partial",
    "DEBUG_CHECKS",
]

# When true, every divided difference is multiplied back and compared.
DEBUG_CHECKS = False

_ZERO = mpq(0)
_ONE = mpq(1)


def Q(value) -> mpq:
    """Convert ``value`` to an exact rational.

    Accepts ints, ``Fraction``, ``mpq`` and strings of the form ``"p/q"`` or
    ``"p"``.  Floats are rejected: the library never rounds.
    """
    if isinstance(value, mpq):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction) or isinstance(value, _RationalABC):
        return mpq(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            num, den = int(num), int(den)
        else:
            num, den = int(text), 1
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return mpq(num, den)
    if type(value).__name__ == "mpz":
        return mpq(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def _fmt_rational(c: mpq) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Poly:
    """Sparse polynomial in ``N`` variables with exact rational coefficients.

    Instances are treated as immutable values; operations always return new
    objects and never store zero coefficients.
    """

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms=None):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != N or min(exp) < 0:
                    raise ValueError(f"bad exponent {exp} for N={N}")
                c = Q(c)
                if c:
                    clean[exp] = clean.get(exp, _ZERO) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    @classmethod
    def _raw(cls, N, terms):
        # trusted constructor: terms already pruned, tuples, mpq
        p = object.__new__(cls)
        p.N = N
        p.terms = terms
        return p

    @classmethod
    def zero(cls, N):
        return cls._raw(N, {})

    @classmethod
    def constant(cls, N, c=1):
        c = Q(c)
        return cls._raw(N, {(0,) * N: c} if c else {})

    @classmethod
    def variable(cls, N, j):
        _check_index(N, j)
        exp = [0] * N
        exp[j - 1] = 1
        return cls._raw(N, {tuple(exp): _ONE})

    # -- inspection ---------------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coeff(self, exp) -> mpq:
        return self.terms.get(tuple(exp), _ZERO)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def support(self):
        return sorted(self.terms)

    # -- ring operations ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.N != self.N:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return Poly.constant(self.N, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, _ZERO) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Poly._raw(self.N, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.N, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = Q(c)
        if not c:
            return Poly.zero(self.N)
        return Poly._raw(self.N, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._raw(self.N, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        c = Q(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(self.N, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.N == other.N and self.terms == other.terms
        try:
            return self == Poly.constant(self.N, other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def evaluate(self, point):
        """Evaluate at ``point``; arithmetic happens in the point's number type."""
        if len(point) != self.N:
            raise ValueError("point has wrong dimension")
        total = 0
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(point, exp):
                if e:
                    term = term * x**e
            total = total + term
        return total

    # -- display and serialization -----------------------------------------
    def __repr__(self):
        return f"Poly({self.N}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[exp]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp)
                if e
            )
            if not mono:
                body = _fmt_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{_fmt_rational(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self):
        """Canonical JSON-ready form (terms sorted by exponent vector)."""
        return {
            "N": self.N,
            "terms": [
                {
                    "exp": list(exp),
                    "num": str(self.terms[exp].numerator),
                    "den": str(self.terms[exp].denominator),
                }
                for exp in sorted(self.terms)
            ],
        }

    @classmethod
    def from_dict(cls, data):
        terms = {}
        for t in data["terms"]:
            terms[tuple(t["exp"])] = mpq(int(t["num"]), int(t["den"]))
        return cls(int(data["N"]), terms)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str):
        return cls.from_dict(json.loads(text))


def _check_index(N, j):
    if not 1 <= j <= N:
        raise IndexError(f"variable index {j} out of range 1..{N}")


def monomial(mu) -> Poly:
    """``x^mu`` with coefficient one."""
    mu = tuple(int(m) for m in mu)
    if min(mu) < 0:
        raise ValueError("exponents must be non-negative")
    return Poly._raw(len(mu), {mu: _ONE})


def exchange(p: Poly, j: int, k: int) -> Poly:
    """Swap variables ``x_j`` and ``x_k``."""
    _check_index(p.N, j)
    _check_index(p.N, k)
    if j == k:
        return p
    j, k = j - 1, k - 1
    out = {}
    for exp, c in p.terms.items():
        e = list(exp)
        e[j], e[k] = e[k], e[j]
        out[tuple(e)] = c
    return Poly._raw(p.N, out)


def reflect(p: Poly, j: int) -> Poly:
    """``x_j -> -x_j``."""
    _check_index(p.N, j)
    j -= 1
    return Poly._raw(p.N, {e: (-c if e[j] & 1 else c) for e, c in p.terms.items()})


def reflect_power(p: Poly, lam) -> Poly:
    """Apply ``t_1^{lam_1} ... t_N^{lam_N}`` for integer ``lam``."""
    if len(lam) != p.N:
        raise ValueError("lambda has wrong length")
    lam = [int(l) for l in lam]
    out = {}
    for e, c in p.terms.items():
        parity = sum(l * x for l, x in zip(lam, e)) & 1
        out[e] = -c if parity else c
    return Poly._raw(p.N, out)


def _accumulate(out, exp, c):
    s = out.get(exp, _ZERO) + c
    if s:
        out[exp] = s
    else:
        out.pop(exp, None)


def _telescope(out, exp, j, k, lo, d, c, sign_k):
    # adds c * x_j^lo x_k^lo * sum_{i<d} x_j^{d-1-i} (sign_k x_k)^i
    base = list(exp)
    for i in range(d):
        e = base[:]
        e[j] = lo + d - 1 - i
        e[k] = lo + i
        _accumulate(out, tuple(e), -c if (sign_k < 0 and i & 1) else c)


def diffquot_minus(p: Poly, j: int, k: int) -> Poly:
    """``((1 - K_jk) p) / (x_j - x_k)``."""
    _check_index(p.N, j)
    _check_index(p.N, k)
    if j == k:
        raise ValueError("j and k must differ")
    jj, kk = j - 1, k - 1
    out = {}
    for exp, c in p.terms.items():
        m, n = exp[jj], exp[kk]
        if m > n:
            _telescope(out, exp, jj, kk, n, m - n, c, 1)
        elif m < n:
            _telescope(out, exp, jj, kk, m, n - m, -c, 1)
    q = Poly._raw(p.N, out)
    if DEBUG_CHECKS:
        lin = Poly.variable(p.N, j) - Poly.variable(p.N, k)
        assert q * lin == p - exchange(p, j, k), "nonzero remainder in diffquot_minus"
    return q


def diffquot_plus(p: Poly, j: int, k: int) -> Poly:
    """``((1 - t_j t_k K_jk) p) / (x_j + x_k)``."""
    _check_index(p.N, j)
    _check_index(p.N, k)
    if j == k:
        raise ValueError("j and k must differ")
    jj, kk = j - 1, k - 1
    out = {}
    for exp, c in p.terms.items():
        m, n = exp[jj], exp[kk]
        if m > n:
            _telescope(out, exp, jj, kk, n, m - n, c, -1)
        elif m < n:
            d = n - m
            _telescope(out, exp, jj, kk, m, d, c if d & 1 else -c, -1)
    q = Poly._raw(p.N, out)
    if DEBUG_CHECKS:
        lin = Poly.variable(p.N, j) + Poly.variable(p.N, k)
        other = reflect(reflect(exchange(p, j, k), j), k)
        assert q * lin == p - other, "nonzero remainder in diffquot_plus"
    return q


def diffquot_reflect(p: Poly, j: int) -> Poly:
    """``((1 - t_j) p) / x_j``: twice the odd part in ``x_j``, divided by ``x_j``."""
    _check_index(p.N, j)
    jj = j - 1
    out = {}
    for exp, c in p.terms.items():
        if exp[jj] & 1:
            e = list(exp)
            e[jj] -= 1
            out[tuple(e)] = 2 * c
    q = Poly._raw(p.N, out)
    if DEBUG_CHECKS:
        assert q * Poly.variable(p.N, j) == p - reflect(p, j), "nonzero remainder"
    return q


def partial(p: Poly, j: int) -> Poly:
    """``d p / d x_j``."""
    _check_index(p.N, j)
    jj = j - 1
    out = {}
    for exp, c in p.terms.items():
        m = exp[jj]
        if m:
            e = list(exp)
            e[jj] = m - 1
            out[tuple(e)] = m * c
    return Poly._raw(p.N, out)
