"""Catalogue of exact operator identities, as pairs of :class:`Operator`.

Each :class:`Relation` states ``lhs == rhs`` on every polynomial.  The groups
are

* ``commutation``: Cherednik operators against exchanges and reflections,
  and their mutual commutativity;
* ``braid``: braid and Knop-Sahi algebra, including ``S_j^2``;
* ``intertwining``: how ``S_j`` and ``e^dagger`` move past ``d^lambda``;
* ``raising``: the same for the raising operators ``A_mu^dagger``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import dunkl as D
from . import weyl
from .exactpoly import Poly
from .params import Params

GROUPS = ("commutation", "braid", "intertwining", "raising")


@dataclass(frozen=True)
class Relation:
    name: str
    group: str
    lhs: D.Operator
    rhs: D.Operator

    def difference(self, p: Poly) -> Poly:
        return self.lhs(p) - self.rhs(p)

    def holds(self, p: Poly) -> bool:
        return self.lhs(p) == self.rhs(p)


def _cyclic_shift(lam):
    # s_1 s_2 ... s_{N-1}(lambda): s_{N-1} acts first
    lam = tuple(lam)
    for j in range(len(lam) - 1, 0, -1):
        lam = weyl.simple_reflection(lam, j)
    return lam


def _unit(N, k):
    return tuple(1 if i == k else 0 for i in range(1, N + 1))


def operator_relations(params: Params, N: int, groups=GROUPS, raising_bound=2):
    """All relations for ``N`` variables in the requested ``groups``.

    ``raising_bound`` caps ``|mu|`` for the raising-operator identities.
    """
    p = params
    B = p.is_B
    a = p.a
    rels = []

    def add(name, group, lhs, rhs):
        if group in groups:
            rels.append(Relation(name, group, lhs, rhs))

    zero = D.Operator(lambda f: Poly.zero(f.N), "0")
    d = {j: D.d(p, j) for j in range(1, N + 1)}

    # -- commutation ---------------------------------------------------------
    for l in range(1, N):
        tail = a * (1 + D.t(l) @ D.t(l + 1)) if B else D.identity() * a
        add(f"d{l} K{l} - K{l} d{l + 1} = tail", "commutation", d[l] @ D.K(l) - D.K(l) @ d[l + 1], tail)
        add(f"d{l + 1} K{l} - K{l} d{l} = -tail", "commutation", d[l + 1] @ D.K(l) - D.K(l) @ d[l], -tail)
    for l in range(1, N + 1):
        for m in range(1, N):
            if l not in (m, m + 1):
                add(f"[d{l}, K{m}] = 0", "commutation", d[l] @ D.K(m), D.K(m) @ d[l])
        if B:
            for m in range(1, N + 1):
                add(f"[d{l}, t{m}] = 0", "commutation", d[l] @ D.t(m), D.t(m) @ d[l])
    for j, k in itertools.combinations(range(1, N + 1), 2):
        add(f"[d{j}, d{k}] = 0", "commutation", d[j] @ d[k], d[k] @ d[j])

    # -- braid / Knop-Sahi algebra -----------------------------------------
    S = {j: D.S(p, j) for j in range(1, N)}
    ed, e = D.e_dagger(p), D.e(p)
    for j in range(1, N - 1):
        add(f"S{j} S{j + 1} S{j} = S{j + 1} S{j} S{j + 1}", "braid",
            S[j] @ S[j + 1] @ S[j], S[j + 1] @ S[j] @ S[j + 1])
        add(f"S{j} e+ = e+ S{j + 1}", "braid", S[j] @ ed, ed @ S[j + 1])
    for j, k in itertools.combinations(range(1, N), 2):
        if k - j >= 2:
            add(f"[S{j}, S{k}] = 0", "braid", S[j] @ S[k], S[k] @ S[j])
    if N >= 2:
        add(f"S{N - 1} e+^2 = e+^2 S1", "braid", S[N - 1] @ ed @ ed, ed @ ed @ S[1])
    for j in range(1, N):
        dd = d[j] - d[j + 1]
        if B:
            sq = 2 * a * a * (1 + D.t(j) @ D.t(j + 1)) - dd @ dd
            add(f"t{j} S{j} t{j + 1} S{j} = S{j} t{j + 1} S{j} t{j}", "braid",
                D.t(j) @ S[j] @ D.t(j + 1) @ S[j], S[j] @ D.t(j + 1) @ S[j] @ D.t(j))
        else:
            sq = a * a - dd @ dd
        add(f"S{j}^2", "braid", S[j] @ S[j], sq)
    ground = d[N] - p.b * D.t(N) if B else d[N]
    add("e+ e = (d_N - b t_N) / (2 omega)" if B else "e+ e = d_N / (2 omega)", "braid",
        ed @ e, ground * (1 / (2 * p.omega)))

    # -- intertwining ---------------------------------------------------------
    lams = [_unit(N, k) for k in range(1, N + 1)]
    for lam in lams:
        for j in range(1, N):
            add(f"S{j} d^{lam} = d^s{j}(lam) S{j}", "intertwining",
                S[j] @ D.d_lam(p, lam), D.d_lam(p, weyl.simple_reflection(lam, j)) @ S[j])
            if B:
                add(f"S{j} t^{lam} = t^s{j}(lam) S{j}", "intertwining",
                    S[j] @ D.t_pow(lam), D.t_pow(weyl.simple_reflection(lam, j)) @ S[j])
        add(f"d^{lam} e+ = e+ (d^shift(lam) + lam_N)", "intertwining",
            D.d_lam(p, lam) @ ed, ed @ (D.d_lam(p, _cyclic_shift(lam)) + lam[-1]))

    # -- raising ---------------------------------------------------------------
    if "raising" in groups:
        mus = [m for m in weyl.partitions_upto(N, raising_bound) if any(m)]
        for mu in mus:
            A = D.A_mu_dagger(p, mu)
            for lam in lams:
                shift = sum(x * y for x, y in zip(lam, mu))
                add(f"d^{lam} A{mu}+ = A{mu}+ (d^{lam} + {shift})", "raising",
                    D.d_lam(p, lam) @ A, A @ (D.d_lam(p, lam) + shift))
                if B:
                    sgn = -1 if shift % 2 else 1
                    add(f"t^{lam} A{mu}+ = {sgn:+d} A{mu}+ t^{lam}", "raising",
                        D.t_pow(lam) @ A, sgn * (A @ D.t_pow(lam)))
        for mu, nu in itertools.combinations(mus, 2):
            A, Bm = D.A_mu_dagger(p, mu), D.A_mu_dagger(p, nu)
            add(f"[A{mu}+, A{nu}+] = 0", "raising", A @ Bm, Bm @ A)
    return rels
