"""
A genus-1 Lefschetz fibration on S^4
====================================

Check the factorisation f1 = h o Sh, find the two nodes by descent, and
sample the regular fiber over the north pole, which is the Clifford torus.
"""

# %%
import numpy as np

from acman import lefschetz as lf

for c in lf.verify(n=5000):
    print(f"{'ok  ' if c.passed else 'FAIL'} {c.name}: {c.value:.2e}")

# %%
res = lf.search_critical_points("f1", n_seeds=100, seed=0)
print(res.converged, "descents converged")
for p in res.points:
    print(np.round(p.to_array(), 9))

# %%
fiber = lf.sample_fiber("f1", [0, 0, 1], 300, seed=7)
P = fiber.points
print(f"{len(fiber)} points, |z1| in [{np.hypot(P[:, 0], P[:, 1]).min():.12f}, {np.hypot(P[:, 0], P[:, 1]).max():.12f}]")

# %%
# with the default k the two nodes sit over different points of S^2
up, down = lf.f_full(lf.A_PLUS), lf.f_full(lf.A_MINUS)
print(up, down, lf.chordal_distance(up, down))
