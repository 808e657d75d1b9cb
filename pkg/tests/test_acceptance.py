"""The eleven acceptance criteria, each at its stated tolerance and time limit.

Run with ``pytest tests/test_acceptance.py -v``; a pass/fail line per
criterion is printed in the terminal summary.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from acman import lefschetz as lf
from acman.chern_algebra import ChernPolynomial, segre_polynomial, total_chern
from acman.errors import DegenerateK, IntegralityViolation, SignatureMismatch
from acman.manifolds import (
    E8,
    ChernNumberTable,
    ManifoldDescriptor,
    catalog,
    four_manifold,
    product,
    projective_space,
    riemann_surface,
    signature,
    torus,
)
from acman.obstruction import (
    HomotopyGroupValue as G,
    Verdict,
    bott_group,
    decide_embed_R6,
    decide_embed_R_4m,
    decide_immerse_R_4m,
    invariant_I,
    parallelizable_4mfd,
    smooth_embed_R6,
)

c = ChernPolynomial.c


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, limit {seconds} s"


@pytest.mark.acceptance(1, "surface invariant I = 1 - g, g = 0..20")
def test_surface_invariant():
    with within(0.1):
        values = [invariant_I(riemann_surface(g)) for g in range(21)]
    assert values == [1 - g for g in range(21)]


@pytest.mark.acceptance(2, "immersion into R^4 iff g in {0, 1}")
def test_corollary_equivalence():
    with within(0.1):
        yes = [g for g in range(21) if decide_immerse_R_4m(riemann_surface(g)).verdict is Verdict.YES]
        sphere = decide_immerse_R_4m(riemann_surface(0))
        torus_imm = decide_immerse_R_4m(riemann_surface(1))
        torus_emb = decide_embed_R_4m(riemann_surface(1))
    assert yes == [0, 1]
    assert sphere.double_points == 1
    assert torus_imm.double_points == 0
    assert torus_emb.verdict is Verdict.YES


@pytest.mark.acceptance(3, "Segre polynomials invert c, k = 1..12")
def test_segre_correctness():
    with within(2.0):
        for k in range(1, 13):
            s_total = sum((segre_polynomial(j) for j in range(k + 1)), ChernPolynomial.zero())
            assert (total_chern(k) * s_total).homogeneous(k).is_zero(), k
        s1, s2, s3 = segre_polynomial(1), segre_polynomial(2), segre_polynomial(3)
    assert s1 == -c(1)
    assert s2 == c(1) * c(1) - c(2)
    assert s3 == -c(1) * c(1) * c(1) + 2 * c(1) * c(2) - c(3)


@pytest.mark.acceptance(4, "projective spaces I = 1, -3, 10")
def test_projective_spaces():
    with within(0.1):
        I = [invariant_I(projective_space(m)) for m in (1, 2, 3)]
        e = [decide_immerse_R_4m(projective_space(m)).normal_euler_number for m in (1, 2, 3)]
    assert I == [1, -3, 10]
    assert e == [-2, 6, -20]


@pytest.mark.acceptance(5, "integrality gate for c(1,1) = 9, c(2) = 2")
def test_integrality_gate():
    M = ManifoldDescriptor("bad", ChernNumberTable(2, {(1, 1): 9, (2,): 2}))
    with pytest.raises(IntegralityViolation):
        invariant_I(M)


@pytest.mark.acceptance(6, "four-manifolds in R^6: T4 Yes, K3 No, torsion Undetermined, chain")
def test_four_manifolds_in_r6():
    cat = catalog()
    four = {name: cat[name]() for name in ["T4", "K3", "S2xS2", "CP2"]}
    assert decide_embed_R6(four["T4"]).verdict is Verdict.YES
    assert decide_embed_R6(four["K3"]).verdict is Verdict.NO
    for M in four.values():
        tors = four_manifold(M.name, M.Q, M.c1, M.euler, torsion_free=False)
        assert decide_embed_R6(tors).verdict is Verdict.UNDETERMINED
        if decide_embed_R6(M).verdict is Verdict.YES:
            assert smooth_embed_R6(M).verdict is Verdict.YES
            assert parallelizable_4mfd(M)


@pytest.mark.acceptance(7, "Hirzebruch validator and signature(E8) = 8")
def test_hirzebruch_validator():
    with pytest.raises(SignatureMismatch):
        four_manifold("CP2", [[1]], [1], 3)
    assert four_manifold("CP2", [[1]], [3], 3).signature == 1
    assert signature(E8) == 8


@pytest.mark.acceptance(8, "Bott table for k <= 2n-2, n <= 8, and pi_1..4 Gamma(3)")
def test_bott_table():
    display = {0: G.Z2, 1: G.ZERO, 2: G.Z, 3: G.ZERO, 4: G.ZERO, 5: G.ZERO, 6: G.Z, 7: G.Z2}
    for n in range(1, 9):
        for k in range(1, 2 * n - 1):
            assert bott_group(k, n) is display[k % 8], (k, n)
    assert [bott_group(i, 3) for i in range(1, 5)] == [G.ZERO, G.Z, G.ZERO, G.ZERO]


@pytest.mark.acceptance(9, "Matsumoto numerics: identities, nodes, critical points, k")
def test_matsumoto_numerics():
    with within(30.0):
        P = lf.random_sphere_points(10_000, 5, np.random.default_rng(0))
        out = lf.f1(P)
        assert np.max(np.abs(out - lf.hopf(lf.suspension_hopf(P)))) <= 1e-12
        for Y in (out, lf.suspension_hopf(P)):
            assert np.max(np.abs(np.linalg.norm(Y, axis=1) - 1)) <= 1e-12
        eps = np.finfo(float).eps
        assert np.max(np.abs(lf.f1(lf.A_PLUS) - [0, 0, -1])) <= eps
        assert np.max(np.abs(lf.f1(lf.A_MINUS) - [0, 0, -1])) <= eps

        pts = lf.find_critical_points("f1", 200, seed=0)
        arr = sorted((p.to_array() for p in pts), key=lambda v: -v[4])
        assert len(arr) == 2
        assert np.max(np.abs(arr[0] - lf.A_PLUS)) <= 1e-6
        assert np.max(np.abs(arr[1] - lf.A_MINUS)) <= 1e-6

        assert lf.chordal_distance(lf.f_full(lf.A_PLUS), lf.f_full(lf.A_MINUS)) >= 0.5
        with pytest.raises(DegenerateK):
            lf.f_full(lf.A_PLUS, lf.IDENTITY_K)


@pytest.mark.acceptance(10, "regular fiber over (0, 1) is the Clifford torus")
def test_fiber_torus():
    with within(60.0):
        s = lf.sample_fiber("f1", [0.0, 0.0, 1.0], 500, seed=0)
        assert s.convergence_rate >= 0.5
        P = s.points
        assert np.all(np.abs(P[:, 4]) <= 1e-6)
        assert np.all(np.abs(np.hypot(P[:, 0], P[:, 1]) - 1 / math.sqrt(2)) <= 1e-6)
        assert all(lf.jacobian_rank("f1", p) == 2 for p in P)


@pytest.mark.acceptance(11, "torus factor kills I; product commutes")
def test_product_kunneth():
    cat = catalog()
    closed = [make() for name, make in cat.items() if name.startswith(("sigma", "cp"))]
    for N in closed:
        assert invariant_I(product(torus(1), N)) == 0, N.name
        assert product(torus(1), N).table == product(N, torus(1)).table
    for A in closed[:6]:
        for B in closed[-6:]:
            assert product(A, B).table == product(B, A).table
