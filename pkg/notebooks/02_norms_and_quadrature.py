"""Exact norm ratios checked against high-precision quadrature.

For integer couplings the weight is a polynomial times a Gaussian, so
Gauss-Hermite quadrature with enough nodes is exact up to rounding.  We
compare its Gram matrix with the closed-form ratios.
"""
import mpmath

from calogero import Params, nonsym_poly, norms, oracle, weyl

p = Params("B", 1, 1, "1/2")
N = 2
labels = list(weyl.compositions_upto(N, 3))
polys = [nonsym_poly(p, mu).poly for mu in labels]

# %% 40-digit Gram matrix
G = oracle.quadrature_gram(p, polys, precision=40, labels=labels)
print("nodes per axis:", G.nodes)
print("largest off-diagonal / smallest diagonal:", mpmath.nstr(G.max_offdiag_ratio(), 3))

# %% Diagonal ratios against the exact formula
d = G.diagonal()
with mpmath.workdps(40):
    for mu, val in zip(labels, d):
        exact = norms.norm_ratio_nonsym(p, mu).value
        print(f"{str(mu):8} exact {str(exact):>10}   quadrature {mpmath.nstr(val / d[0], 20)}")

# %% Absolute ground-state norm
print("<1,1> =", mpmath.nstr(norms.base_norm_float(p, N, 30), 25))
