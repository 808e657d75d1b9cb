"""
Four-manifolds in R^6
=====================

Intersection forms, the Hirzebruch check, and the two R^6 criteria side by
side for the shipped four-manifolds.
"""

# %%
from acman.errors import SignatureMismatch
from acman.manifolds import E8, catalog, connected_sum, four_manifold, signature
from acman.obstruction import decide_embed_R6, parallelizable_4mfd, smooth_embed_R6

print("signature(E8) =", signature(E8))

# %%
try:
    four_manifold("CP2?", [[1]], [1], 3)
except SignatureMismatch as exc:
    print("rejected:", exc)

# %%
cat = catalog()
print(f"{'':8}{'sigma':>6}{'chi':>5}{'c1^2':>6}  ph  smooth  parallelizable")
for name in ["T4", "K3", "S2xS2", "CP2"]:
    M = cat[name]()
    ph, sm = decide_embed_R6(M).verdict.value, smooth_embed_R6(M).verdict.value
    print(f"{name:8}{M.signature:>6}{M.euler:>5}{M.c1_squared:>6}  {ph:<3} {sm:<7} {parallelizable_4mfd(M)}")

# %%
# the ledger behind the T4 verdict
for e in decide_embed_R6(cat["T4"]()).ledger:
    print(e.to_json())

# %%
# c1^2 - 2 chi - 3 sigma grows by 4 under connected sum
S = connected_sum(cat["CP2"](), cat["S2xS2"](), validate=False)
print(S.c1_squared - 2 * S.euler - 3 * S.signature)
