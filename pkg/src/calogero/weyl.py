"""Combinatorics of the A_{N-1} root system and the symmetric group.

Compositions and partitions are plain tuples of non-negative ints.  A Weyl
group element acts on the epsilon-basis by permuting coordinates; the simple
reflection ``s_j`` swaps entries ``j`` and ``j+1`` (1-based).

Reduced words are stored in *application order*: ``ReducedWord((j1, ..., jl))``
denotes ``w = s_jl ... s_j2 s_j1``, so ``s_j1`` acts first.  This is the order
in which the inversion set ``{alpha_j1, s_j1(alpha_j2), ...}`` is generated and
in which braid operators are applied in the Rodrigues formula.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .errors import BoundExceeded
from .exactpoly import Q

POINCARE_BOUND = 8


def as_composition(mu, N=None):
    mu = tuple(int(m) for m in mu)
    if not mu:
        raise ValueError("empty composition")
    if min(mu) < 0:
        raise ValueError(f"composition entries must be non-negative: {mu}")
    if N is not None and len(mu) != N:
        raise ValueError(f"composition {mu} does not have {N} entries")
    return mu


def is_partition(mu) -> bool:
    return all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)) and min(mu) >= 0


def degree(mu) -> int:
    return sum(mu)


def simple_reflection(vec, j):
    """``s_j(vec)``: swap coordinates ``j`` and ``j+1``."""
    v = list(vec)
    v[j - 1], v[j] = v[j], v[j - 1]
    return tuple(v)


@dataclass(frozen=True)
class ReducedWord:
    """Word ``letters = (j1, ..., jl)`` for ``w = s_jl ... s_j1`` in S_N."""

    letters: tuple
    N: int

    def __post_init__(self):
        letters = tuple(int(j) for j in self.letters)
        for j in letters:
            if not 1 <= j <= self.N - 1:
                raise ValueError(f"letter {j} out of range for N={self.N}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def apply(self, vec):
        """``w(vec)``, applying ``s_j1`` first."""
        for j in self.letters:
            vec = simple_reflection(vec, j)
        return tuple(vec)

    def prefixes(self, vec):
        """The chain ``vec, s_j1(vec), s_j2 s_j1(vec), ...``."""
        chain = [tuple(vec)]
        for j in self.letters:
            chain.append(simple_reflection(chain[-1], j))
        return chain

    def is_reduced(self) -> bool:
        return len(self.letters) == permutation_length(self.position_map())

    def position_map(self):
        """``pi`` with ``w(e_i) = e_{pi[i]}`` (0-based)."""
        # apply w to the labelled vector (0, 1, ..., N-1): entry at position p is
        # the label i with w(e_i) = e_p.
        image = self.apply(tuple(range(self.N)))
        pi = [0] * self.N
        for p, i in enumerate(image):
            pi[i] = p
        return tuple(pi)


def permutation_length(pi) -> int:
    """Number of inversions of ``pi``."""
    n = len(pi)
    return sum(1 for i in range(n) for k in range(i + 1, n) if pi[i] > pi[k])


def sort_to_partition(mu):
    """Return ``(mu_plus, w_mu)`` with ``w_mu(mu_plus) == mu``, ``w_mu`` shortest.

    Ties among equal entries are resolved stably, which gives the unique
    minimal-length element of the coset.
    """
    mu = as_composition(mu)
    N = len(mu)
    # bubble mu up to mu_plus, swapping only strict ascents
    letters_from_mu = []
    cur = list(mu)
    changed = True
    while changed:
        changed = False
        for j in range(N - 1):
            if cur[j] < cur[j + 1]:
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
                letters_from_mu.append(j + 1)
                changed = True
    # mu_plus = s_km ... s_k1 (mu)  =>  mu = s_k1 ... s_km (mu_plus)
    word = ReducedWord(tuple(reversed(letters_from_mu)), N)
    return tuple(cur), word


def inversion_set(word: ReducedWord):
    """``R_w = {alpha_j1, s_j1(alpha_j2), s_j1 s_j2(alpha_j3), ...}``.

    Roots are returned as ``(i, k)`` pairs (0-based) meaning ``e_i - e_k``.
    Raises ``ValueError`` if the word is not reduced.
    """
    if not word.is_reduced():
        raise ValueError(f"word {word.letters} is not reduced")
    roots = []
    for n, j in enumerate(word.letters):
        vec = [0] * word.N
        vec[j - 1], vec[j] = 1, -1
        for jj in reversed(word.letters[:n]):
            vec = list(simple_reflection(vec, jj))
        roots.append(_root_pair(vec))
    result = frozenset(roots)
    assert len(result) == len(word)
    return result


def _root_pair(vec):
    i = next(p for p, x in enumerate(vec) if x == 1)
    k = next(p for p, x in enumerate(vec) if x == -1)
    if i > k:
        raise ValueError(f"{vec} is a negative root; word not reduced")
    return (i, k)


def root_vector(root, N):
    """Coordinates of ``e_i - e_k`` over the epsilon basis."""
    i, k = root
    vec = [mpq(0)] * N
    vec[i], vec[k] = mpq(1), mpq(-1)
    return tuple(vec)


def coroot(root):
    """``alpha^vee = 2 alpha / <alpha, alpha>``; equal to the root in type A."""
    return root


def pairing(root, vec):
    """``<alpha^vee, vec>`` for ``alpha = e_i - e_k``."""
    i, k = coroot(root)
    return vec[i] - vec[k]


@lru_cache(maxsize=None)
def positive_roots(N):
    return tuple((i, k) for i in range(N) for k in range(i + 1, N))


def inversion_set_direct(perm_word: ReducedWord):
    """``R_+ intersect w^{-1} R_-`` computed from the permutation itself."""
    pi = perm_word.position_map()
    return frozenset((i, k) for i, k in positive_roots(perm_word.N) if pi[i] > pi[k])


class Order(enum.Enum):
    EQUAL = "Equal"
    LESS = "Less"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


def dominance_less(nu_plus, mu_plus) -> bool:
    """Strict dominance ``nu_plus < mu_plus`` among partitions of equal degree."""
    if nu_plus == mu_plus or sum(nu_plus) != sum(mu_plus):
        return False
    s_nu = s_mu = 0
    for x, y in zip(nu_plus, mu_plus):
        s_nu += x
        s_mu += y
        if s_nu > s_mu:
            return False
    return True


def in_positive_root_lattice(vec) -> bool:
    """Whether ``vec`` lies in ``Q_+ = sum Z_{>=0} alpha_j``."""
    partial_sum = 0
    for x in vec[:-1]:
        partial_sum += x
        if partial_sum < 0:
            return False
    return partial_sum + vec[-1] == 0


def precedes(nu, mu) -> bool:
    """``nu <= mu`` in the triangularity order (reflexive)."""
    if len(nu) != len(mu):
        raise ValueError("compositions of different length")
    nu_plus = tuple(sorted(nu, reverse=True))
    mu_plus = tuple(sorted(mu, reverse=True))
    if nu_plus == mu_plus:
        return in_positive_root_lattice([m - n for m, n in zip(mu, nu)])
    return dominance_less(nu_plus, mu_plus)


def order_compare(nu, mu) -> Order:
    nu, mu = tuple(nu), tuple(mu)
    if nu == mu:
        return Order.EQUAL
    if precedes(nu, mu):
        return Order.LESS
    if precedes(mu, nu):
        return Order.GREATER
    return Order.INCOMPARABLE


def order_key(nu):
    """Sort key for a linear extension of the order refined by degree."""
    return (sum(nu), tuple(sorted(nu, reverse=True)), tuple(nu))


def weyl_orbit(mu_plus):
    """Distinct rearrangements of ``mu_plus`` with their shortest words.

    Returned in decreasing ``order_key``, so ``mu_plus`` comes first.
    """
    mu_plus = as_composition(mu_plus)
    if not is_partition(mu_plus):
        raise ValueError(f"{mu_plus} is not a partition")
    perms = sorted(set(itertools.permutations(mu_plus)), key=order_key, reverse=True)
    return [(nu, sort_to_partition(nu)[1]) for nu in perms]


def orbit_size(mu_plus) -> int:
    counts = {}
    for m in mu_plus:
        counts[m] = counts.get(m, 0) + 1
    size = math.factorial(len(mu_plus))
    for c in counts.values():
        size //= math.factorial(c)
    return size


def w_mu_apply(mu, vec):
    """``w_mu(vec)``; e.g. ``rho(mu) = w_mu(rho)``."""
    _, word = sort_to_partition(mu)
    return word.apply(vec)


def rho(N):
    return tuple(mpq(N - 2 * j + 1, 2) for j in range(1, N + 1))


def delta(N):
    return tuple(mpq(N - j) for j in range(1, N + 1))


def rho_k_B(N, a, b):
    a, b = Q(a), Q(b)
    return tuple(2 * a * (N - j) + b for j in range(1, N + 1))


def special_vectors(N, params):
    """``(rho, delta, rho_k^(B))`` for ``N`` variables."""
    if N < 1:
        raise ValueError("N must be positive")
    return rho(N), delta(N), rho_k_B(N, params.a, params.b)


def compositions(N, deg):
    """All compositions of exactly ``deg`` into ``N`` parts."""
    if N == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in compositions(N - 1, deg - first):
            yield (first,) + rest


def compositions_upto(N, max_deg):
    for d in range(max_deg + 1):
        yield from compositions(N, d)


def partitions(N, deg, largest=None):
    """Partitions of ``deg`` with at most ``N`` parts, padded to length ``N``."""
    if largest is None:
        largest = deg
    if N == 0:
        if deg == 0:
            yield ()
        return
    for first in range(min(deg, largest), -1, -1):
        if first * N < deg:
            break
        for rest in partitions(N - 1, deg - first, first):
            yield (first,) + rest


def partitions_upto(N, max_deg):
    for d in range(max_deg + 1):
        yield from partitions(N, d)


def reduced_words(word: ReducedWord, limit=1000):
    """All reduced words (application order) of the element ``word`` represents."""
    target = word.position_map()
    N = word.N
    ell = len(word)
    # breadth-first over prefixes; a prefix extends if length grows by one
    results = []
    queue = deque([()])
    while queue:
        prefix = queue.popleft()
        if len(prefix) == ell:
            if ReducedWord(prefix, N).position_map() == target:
                results.append(ReducedWord(prefix, N))
                if len(results) >= limit:
                    break
            continue
        for j in range(1, N):
            cand = ReducedWord(prefix + (j,), N)
            if not cand.is_reduced():
                continue
            # w = u * v with u of length ell - len(cand); keep only prefixes of w
            if _is_right_factor(cand, target, ell):
                queue.append(cand.letters)
    return results


def _is_right_factor(cand: ReducedWord, target, ell):
    # cand acts first; need l(w * cand^{-1}) == ell - len(cand)
    inv = ReducedWord(tuple(reversed(cand.letters)), cand.N)
    # position map of w composed with cand^{-1}: first apply cand^{-1}, then w
    pi_inv = inv.position_map()
    composed = tuple(target[pi_inv[i]] for i in range(cand.N))
    return permutation_length(composed) == ell - len(cand)


def poincare_polynomial(N, bound=POINCARE_BOUND):
    """Coefficients ``[c_0, c_1, ...]`` of ``sum_{w in S_N} t^{l(w)}`` by enumeration."""
    if N > bound:
        raise BoundExceeded(f"N={N} exceeds the enumeration bound {bound}")
    coeffs = [0] * (N * (N - 1) // 2 + 1)
    for pi in itertools.permutations(range(N)):
        coeffs[permutation_length(pi)] += 1
    return coeffs
