"""
Segre classes and the invariant I
=================================

Invert the total Chern class, pair the top Segre class with a few closed
almost complex manifolds, and read off which of them immerse or embed in
R^{4m}.
"""

# %%
from acman import decide_embed_R_4m, decide_immerse_R_4m, invariant_I, segre_polynomial
from acman.chern_algebra import ChernPolynomial, total_chern
from acman.manifolds import product, projective_space, riemann_surface, torus

for k in range(5):
    print(f"s_{k} = {segre_polynomial(k)}")

# %%
# (1 + c1 + ... + c4)(s0 + ... + s4) has nothing in weights 1..4
s = sum((segre_polynomial(j) for j in range(5)), ChernPolynomial.zero())
print((total_chern(4) * s).truncate(4))

# %%
# surfaces: I = 1 - g, so only the sphere and the torus immerse
for g in range(5):
    d = decide_immerse_R_4m(riemann_surface(g))
    print(f"genus {g}: I = {invariant_I(riemann_surface(g)):>2}  immerse {d.verdict.value:<3}  double points {d.double_points}")

# %%
for m in (1, 2, 3):
    M = projective_space(m)
    d = decide_immerse_R_4m(M)
    print(f"CP^{m}: I = {d.invariant_I}, normal Euler number {d.normal_euler_number}, immerse {d.verdict.value}")

# %%
# a torus factor kills every Chern number, so T^2 x N always embeds
M = product(torus(1), projective_space(2))
print({tuple(k): v for k, v in M.table.items()}, decide_embed_R_4m(M).verdict.value)
