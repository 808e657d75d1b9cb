import json

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from acman.chern_algebra import Partition, partitions
from acman.errors import (
    DescriptorError,
    NotCharacteristic,
    NotSymmetric,
    NotUnimodular,
    OpenManifold,
    SignatureMismatch,
)
from acman.manifolds import (
    E8,
    HYPERBOLIC,
    ChernNumberTable,
    ManifoldDescriptor,
    block_sum,
    catalog,
    connected_sum,
    descriptor_from_json,
    descriptor_to_json,
    determinant,
    four_manifold,
    load_descriptor,
    product,
    projective_space,
    riemann_surface,
    signature,
    torus,
)

H = HYPERBOLIC


def entries(M):
    return {tuple(k): v for k, v in M.table.items()}


# -- catalog families -------------------------------------------------------------


@pytest.mark.parametrize("g, c1", [(0, 2), (1, 0), (3, -4)])
def test_riemann_surface(g, c1):
    assert entries(riemann_surface(g)) == {(1,): c1}


def test_projective_space_tables():
    assert entries(projective_space(1)) == {(1,): 2}
    assert entries(projective_space(2)) == {(2,): 3, (1, 1): 9}
    assert entries(projective_space(3)) == {(3,): 4, (2, 1): 24, (1, 1, 1): 64}


@pytest.mark.parametrize("m", [1, 2, 3])
def test_torus_all_zero(m):
    T = torus(m)
    assert set(T.table) == set(partitions(m))
    assert all(v == 0 for v in T.table.values())


def test_catalog_euler_characteristics():
    expected = {}
    for g in range(11):
        expected[f"sigma{g}"] = 2 - 2 * g
    for m in range(1, 7):
        expected[f"cp{m}"] = m + 1
        expected[f"torus{m}"] = 0
    cat = catalog()
    for name, chi in expected.items():
        assert cat[name]().euler == chi, name


def test_closed_descriptor_needs_full_table():
    with pytest.raises(DescriptorError):
        ManifoldDescriptor("bad", ChernNumberTable(2, {(2,): 3}))


def test_open_descriptor_may_be_empty():
    M = ManifoldDescriptor("open", ChernNumberTable(2), closed=False)
    assert len(M.table) == 0
    with pytest.raises(OpenManifold):
        M.euler


def test_table_rejects_wrong_weight():
    with pytest.raises(DescriptorError):
        ChernNumberTable(2, {(3,): 1})


# -- products ---------------------------------------------------------------------


def projective_product_oracle(a, b):
    """Chern numbers of CP^a x CP^b from c = (1+x)^(a+1) (1+y)^(b+1)."""
    x, y = sympy.symbols("x y")
    total = sympy.expand((1 + x) ** (a + 1) * (1 + y) ** (b + 1))
    poly = sympy.Poly(total, x, y)
    ck = {}
    for (i, j), coeff in poly.terms():
        ck[i + j] = ck.get(i + j, 0) + coeff * x**i * y**j
    out = {}
    for lam in partitions(a + b):
        mono = sympy.expand(sympy.Mul(*(ck[part] for part in lam)))
        out[tuple(lam)] = int(sympy.Poly(mono, x, y).coeff_monomial(x**a * y**b))
    return out


@pytest.mark.parametrize("a, b", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_product_of_projective_spaces(a, b):
    assert entries(product(projective_space(a), projective_space(b))) == projective_product_oracle(a, b)


def test_sphere_times_sphere():
    S2 = riemann_surface(0)
    assert entries(product(S2, S2)) == {(2,): 4, (1, 1): 8}


def test_torus_factor_kills_everything():
    for N in [riemann_surface(0), riemann_surface(4), projective_space(2), projective_space(3)]:
        assert all(v == 0 for v in product(torus(1), N).table.values())


catalog_closed = st.sampled_from(
    [riemann_surface(0), riemann_surface(2), projective_space(1), projective_space(2), torus(1)]
)


@given(catalog_closed, catalog_closed)
@settings(max_examples=25)
def test_product_commutes(A, B):
    assert product(A, B).table == product(B, A).table


@given(catalog_closed, catalog_closed, catalog_closed)
@settings(max_examples=25, deadline=None)
def test_product_associates(A, B, C):
    assert product(product(A, B), C).table == product(A, product(B, C)).table


def test_product_of_open_refused():
    open_M = ManifoldDescriptor("open", ChernNumberTable(1), closed=False)
    with pytest.raises(OpenManifold):
        product(open_M, riemann_surface(0))


def test_product_euler_multiplies():
    A, B = projective_space(2), riemann_surface(3)
    assert product(A, B).euler == A.euler * B.euler


# -- signature ------------------------------------------------------------------


def test_signature_small():
    assert signature([[1]]) == 1
    assert signature(H) == 0
    assert signature([]) == 0
    assert signature([[0, 0], [0, 0]]) == 0


def test_e8():
    assert signature(E8) == 8
    assert determinant(E8) == 1
    assert np.all(np.linalg.eigvalsh(np.array(E8, dtype=float)) > 0)


def test_signature_not_symmetric():
    with pytest.raises(NotSymmetric):
        signature([[1, 2], [0, 1]])
    with pytest.raises(NotSymmetric):
        signature([[1, 2]])


def test_zero_diagonal_block_needs_split():
    # no diagonal pivot anywhere; forces the hyperbolic split
    Q = block_sum(H, [[0, 3], [3, 0]])
    assert signature(Q) == 0
    assert determinant(Q) == 9


sym_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.integers(-4, 4), min_size=n * n, max_size=n * n).map(
        lambda v: (np.array(v).reshape(n, n) + np.array(v).reshape(n, n).T).tolist()
    )
)


@given(sym_matrices)
def test_signature_matches_float_eigenvalues(Q):
    ev = np.linalg.eigvalsh(np.array(Q, dtype=float))
    if np.any((np.abs(ev) < 1e-9) & (ev != 0)):
        return  # too close to singular for the float oracle
    assert signature(Q) == int(np.sum(ev > 1e-9) - np.sum(ev < -1e-9))


@given(sym_matrices)
def test_determinant_matches_sympy(Q):
    assert determinant(Q) == sympy.Matrix(Q).det()


def random_unimodular(n, rng, steps=12):
    U = np.eye(n, dtype=object)
    for _ in range(steps):
        i, j = rng.choice(n, 2, replace=False) if n > 1 else (0, 0)
        if i == j:
            U[:, 0] *= -1
            continue
        U[:, i] += int(rng.integers(-2, 3)) * U[:, j]
    return U


@given(sym_matrices, st.integers(0, 2**32 - 1))
def test_signature_congruence_invariant(Q, seed):
    rng = np.random.default_rng(seed)
    n = len(Q)
    U = random_unimodular(n, rng)
    Qm = np.array(Q, dtype=object)
    congruent = (U.T @ Qm @ U).tolist()
    assert signature(congruent) == signature(Q)


# -- four-manifolds ------------------------------------------------------------------


def test_t4():
    T4 = four_manifold("T4", block_sum(H, H, H), [0] * 6, 0)
    assert T4.signature == 0
    assert T4.c1_squared == 0
    assert T4.w2_zero


def test_k3():
    negE8 = [[-v for v in row] for row in E8]
    K3 = four_manifold("K3", block_sum(negE8, negE8, H, H, H), [0] * 22, 24)
    assert K3.signature == -16
    assert K3.c1_squared == 0
    assert K3.c1_squared - 2 * K3.euler == 3 * K3.signature


def test_cp2_needs_c1_three():
    with pytest.raises(SignatureMismatch):
        four_manifold("CP2", [[1]], [1], 3)
    CP2 = four_manifold("CP2", [[1]], [3], 3)
    assert CP2.signature == 1
    assert CP2.c1_squared == 9
    assert not CP2.w2_zero


def test_not_characteristic():
    with pytest.raises(NotCharacteristic):
        four_manifold("x", H, [1, 0], 4)


def test_not_unimodular():
    with pytest.raises(NotUnimodular):
        four_manifold("x", [[2]], [0], 0)
    # fine once torsion is admitted
    four_manifold("x", [[0]], [0], 0, torsion_free=False, closed=False)


def test_c1_length_checked():
    with pytest.raises(DescriptorError):
        four_manifold("x", H, [2], 4)


def test_catalog_four_manifolds_satisfy_hirzebruch():
    for name in ["T4", "K3", "S2xS2", "CP2"]:
        M = catalog()[name]()
        assert M.c1_squared - 2 * M.euler == 3 * M.signature


def test_chern_table_of_four_manifold():
    M = catalog()["CP2"]().chern_table()
    assert entries(M) == entries(projective_space(2))


def test_connected_sum_arithmetic():
    S2xS2 = catalog()["S2xS2"]()
    T4 = catalog()["T4"]()
    # c1 = 0 on T4 is not consistent with chi = 2 after summing
    with pytest.raises(SignatureMismatch):
        connected_sum(S2xS2, T4)


def test_connected_sum_cp2_cp2():
    CP2 = catalog()["CP2"]()
    with pytest.raises(SignatureMismatch):
        connected_sum(CP2, CP2)


def test_reversed_cp2_with_naive_c1():
    with pytest.raises(SignatureMismatch):
        four_manifold("-CP2", [[-1]], [3], 3)


def test_connected_sum_formal_data():
    CP2, S2xS2 = catalog()["CP2"](), catalog()["S2xS2"]()
    S = connected_sum(CP2, S2xS2, validate=False)
    assert S.Q == ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert S.c1 == (3, 2, 2)
    assert S.euler == CP2.euler + S2xS2.euler - 2
    assert S.signature == CP2.signature + S2xS2.signature
    assert S.c1_squared == CP2.c1_squared + S2xS2.c1_squared


def test_connected_sum_of_open_refused():
    piece = four_manifold("piece", [[0]], [0], 0, torsion_free=False, closed=False)
    with pytest.raises(OpenManifold):
        connected_sum(piece, catalog()["CP2"]())


@pytest.mark.parametrize("a", ["T4", "K3", "S2xS2", "CP2"])
@pytest.mark.parametrize("b", ["T4", "K3", "S2xS2", "CP2"])
def test_connected_sum_always_off_by_four(a, b):
    A, B = catalog()[a](), catalog()[b]()
    S = connected_sum(A, B, validate=False)
    assert S.c1_squared - 2 * S.euler - 3 * S.signature == 4
    with pytest.raises(SignatureMismatch):
        connected_sum(A, B)


# -- JSON ------------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["sigma3", "cp3", "torus2", "T4", "K3", "S2xS2", "CP2"])
def test_json_round_trip(name, tmp_path):
    M = catalog()[name]()
    data = descriptor_to_json(M)
    assert descriptor_from_json(json.loads(json.dumps(data))) == M
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(data))
    assert load_descriptor(path) == M


def test_json_partition_keys_are_descending_arrays():
    data = descriptor_to_json(projective_space(3))
    assert set(data["entries"]) == {"[3]", "[2,1]", "[1,1,1]"}


def test_json_kind_inferred_from_q():
    data = {"Q": [[1]], "c1": [3], "euler": 3, "torsion_free": True}
    assert descriptor_from_json(data).signature == 1


def test_json_error_has_field_path():
    data = descriptor_to_json(catalog()["T4"]())
    data["Q"][1][0] = "x"
    with pytest.raises(DescriptorError) as exc:
        descriptor_from_json(data)
    assert exc.value.path == "Q[1][0]"


def test_json_bad_partition_key():
    with pytest.raises(DescriptorError) as exc:
        descriptor_from_json({"kind": "chern_table", "m": 2, "entries": {"[1,2]": 9, "[2]": 3}})
    assert exc.value.path == "entries.[1,2]"


def test_json_missing_entry():
    with pytest.raises(DescriptorError) as exc:
        descriptor_from_json({"kind": "chern_table", "m": 2, "entries": {"[2]": 3}})
    assert exc.value.path == "entries"
