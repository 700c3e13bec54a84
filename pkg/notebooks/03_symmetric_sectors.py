"""Symmetric and antisymmetric combinations and the shift relations.

Summing a nonsymmetric family over an orbit with the right coefficients
gives bosonic (+) or fermionic (-) eigenfunctions.  Multiplying by a
Vandermonde factor and shifting the coupling relates the two sectors.
"""
from calogero import Params, construct, norms
from calogero.errors import InvalidSector
from calogero.exactpoly import exchange

p = Params("A", "5/3", omega=1)

# %% Sectors in two variables
for mu in [(1, 0), (2, 0), (1, 1)]:
    for sign in (1, -1):
        try:
            H = construct.sym_poly(p, mu, sign)
        except InvalidSector as err:
            print(f"{mu} {sign:+d}: {err}")
            continue
        assert exchange(H.poly, 1, 2) == H.poly.scale(sign)
        ratio = norms.norm_ratio_sym(p, mu, sign).value
        print(f"{mu} {H.symmetry:13} {H.poly}    norm ratio {ratio}")

# %% Difference-product relation: Delta * H+(a+1) equals H- at mu + delta
(rel,) = construct.parameter_shift_check(p, (1, 0))
print(rel.name, "holds:", rel.equal)

# %% Family B chains need an even label
q = Params("B", "3/7", "2/5", "1/2")
for rel in construct.parameter_shift_check(q, (2, 0)):
    print(rel.name, "holds:", rel.equal)
