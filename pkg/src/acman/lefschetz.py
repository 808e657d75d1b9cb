"""Numerics for Matsumoto's genus-1 Lefschetz fibration S^4 -> S^2.

Coordinates are real arrays with the last axis holding

* S^2 in C x R:       ``(Re z, Im z, t)``
* S^3 in C^2:         ``(Re z1, Im z1, Re z2, Im z2)``
* S^4 in C^2 x R:     ``(Re z1, Im z1, Re z2, Im z2, x)``

so every map works on a single point or on a batch ``(N, dim)``. The
:class:`SpherePoint4` family wraps single points with complex fields; the
public maps return the same kind of object they are given.

The maps are

    h(z1, z2)        = (2 z1 conj(z2), |z1|^2 - |z2|^2)
    Sh(z1, z2, x)    = (2 z1 conj(z2), |z1|^2 - |z2|^2 + i x sqrt(2 - x^2))
    f1               = h o Sh
                     = (4 z1 conj(z2) (|z1|^2 - |z2|^2 - i x sqrt(2 - x^2)),
                        8 |z1|^2 |z2|^2 - 1)
    f                = h o k o Sh

with critical points of f1 at (0, 0, +-1), both over (0, -1).
"""

from __future__ import annotations

import csv
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import BadRotation, DegenerateK, NoConvergence, OffSphere

__all__ = [
    "SpherePoint2",
    "SpherePoint3",
    "SpherePoint4",
    "RotationK",
    "DEFAULT_K",
    "IDENTITY_K",
    "FiberSample",
    "CriticalSearch",
    "Check",
    "hopf",
    "suspension_hopf",
    "f1",
    "f_full",
    "tangent_singular_values",
    "jacobian_rank",
    "find_critical_points",
    "search_critical_points",
    "sample_fiber",
    "export_point_cloud",
    "load_point_cloud",
    "random_sphere_points",
    "chordal_distance",
    "verify",
    "A_PLUS",
    "A_MINUS",
]

log = logging.getLogger(__name__)

TOL_ONSPHERE = 1e-9
TOL_ORTHO = 1e-10
TOL_FIBER = 1e-10
FD_STEP = 1e-5
TOL_SV = 1e-6

A_PLUS = np.array([0.0, 0.0, 0.0, 0.0, 1.0])
A_MINUS = np.array([0.0, 0.0, 0.0, 0.0, -1.0])


# -- point types ---------------------------------------------------------------


def _check_unit(arr, what, tol=TOL_ONSPHERE):
    arr = np.asarray(arr, dtype=float)
    defect = np.abs(np.sum(arr * arr, axis=-1) - 1.0)
    if np.any(defect > tol):
        raise OffSphere(f"{what}: point off the unit sphere by {float(np.max(defect)):.3e}")
    return arr


@dataclass(frozen=True)
class SpherePoint2:
    z: complex
    t: float

    def __post_init__(self):
        _check_unit(self.to_array(), "S^2")

    def to_array(self) -> np.ndarray:
        return np.array([self.z.real, self.z.imag, self.t], dtype=float)

    @classmethod
    def from_array(cls, a) -> "SpherePoint2":
        a = np.asarray(a, dtype=float)
        return cls(complex(a[0], a[1]), float(a[2]))


@dataclass(frozen=True)
class SpherePoint3:
    z1: complex
    z2: complex

    def __post_init__(self):
        _check_unit(self.to_array(), "S^3")

    def to_array(self) -> np.ndarray:
        return np.array([self.z1.real, self.z1.imag, self.z2.real, self.z2.imag], dtype=float)

    @classmethod
    def from_array(cls, a) -> "SpherePoint3":
        a = np.asarray(a, dtype=float)
        return cls(complex(a[0], a[1]), complex(a[2], a[3]))


@dataclass(frozen=True)
class SpherePoint4:
    z1: complex
    z2: complex
    x: float

    def __post_init__(self):
        _check_unit(self.to_array(), "S^4")

    def to_array(self) -> np.ndarray:
        return np.array([self.z1.real, self.z1.imag, self.z2.real, self.z2.imag, self.x], dtype=float)

    @classmethod
    def from_array(cls, a) -> "SpherePoint4":
        a = np.asarray(a, dtype=float)
        return cls(complex(a[0], a[1]), complex(a[2], a[3]), float(a[4]))


def _wrap(raw: Callable, p, dim: int, out_cls, what: str):
    if isinstance(p, (SpherePoint2, SpherePoint3, SpherePoint4)):
        out = raw(p.to_array())
        return out_cls.from_array(out)
    arr = np.asarray(p, dtype=float)
    if arr.shape[-1] != dim:
        raise ValueError(f"{what} expects {dim} real coordinates, got shape {arr.shape}")
    return raw(_check_unit(arr, what))


# -- raw maps on real coordinate arrays ----------------------------------------


def _hopf(a: np.ndarray) -> np.ndarray:
    z1 = a[..., 0] + 1j * a[..., 1]
    z2 = a[..., 2] + 1j * a[..., 3]
    w = 2.0 * z1 * np.conj(z2)
    t = np.abs(z1) ** 2 - np.abs(z2) ** 2
    return np.stack([w.real, w.imag, t], axis=-1)


def _suspension(a: np.ndarray) -> np.ndarray:
    z1 = a[..., 0] + 1j * a[..., 1]
    z2 = a[..., 2] + 1j * a[..., 3]
    x = a[..., 4]
    w1 = 2.0 * z1 * np.conj(z2)
    w2 = np.abs(z1) ** 2 - np.abs(z2) ** 2 + 1j * x * np.sqrt(2.0 - x * x)
    return np.stack([w1.real, w1.imag, w2.real, w2.imag], axis=-1)


def _f1(a: np.ndarray) -> np.ndarray:
    z1 = a[..., 0] + 1j * a[..., 1]
    z2 = a[..., 2] + 1j * a[..., 3]
    x = a[..., 4]
    n1 = np.abs(z1) ** 2
    n2 = np.abs(z2) ** 2
    w = 4.0 * z1 * np.conj(z2) * (n1 - n2 - 1j * x * np.sqrt(2.0 - x * x))
    return np.stack([w.real, w.imag, 8.0 * n1 * n2 - 1.0], axis=-1)


def hopf(p):
    """Hopf map S^3 -> S^2."""
    return _wrap(_hopf, p, 4, SpherePoint2, "hopf")


def suspension_hopf(p):
    """Suspension of the Hopf map, S^4 -> S^3."""
    return _wrap(_suspension, p, 5, SpherePoint3, "suspension_hopf")


def f1(p):
    """Closed form of h o Sh, S^4 -> S^2."""
    return _wrap(_f1, p, 5, SpherePoint2, "f1")


# -- the diffeomorphism k ------------------------------------------------------


def plane_rotation(i: int, j: int, angle: float, n: int = 4) -> np.ndarray:
    """Rotation by ``angle`` in the (e_i, e_j) coordinate plane."""
    R = np.eye(n)
    c, s = math.cos(angle), math.sin(angle)
    R[i, i] = R[j, j] = c
    R[j, i] = s
    R[i, j] = -s
    return R


@dataclass(frozen=True, eq=False)
class RotationK:
    """Orientation-preserving diffeomorphism of S^3: a twist after a rotation.

    ``k(v) = T(R v)`` where ``R`` is special orthogonal on C^2 = R^4 and
    ``T(w1, w2) = (exp(i * twist * Im w2) * w1, w2)``. ``T`` preserves
    ``Im w2``, so its inverse is the opposite twist, and ``twist = 0`` gives
    a plain rotation.

    A plain rotation can never separate the critical values: ``h`` is even
    and ``R(0, -i) = -R(0, i)``. The twist is what breaks that symmetry.
    """

    matrix: np.ndarray = field(default_factory=lambda: np.eye(4))
    twist: float = 0.0

    def __post_init__(self):
        K = np.array(self.matrix, dtype=float)
        if K.shape != (4, 4):
            raise BadRotation(f"k must be 4x4, got {K.shape}")
        err = float(np.max(np.abs(K.T @ K - np.eye(4))))
        if err > TOL_ORTHO:
            raise BadRotation(f"k is not orthogonal: max |K^T K - I| = {err:.3e}")
        if np.linalg.det(K) < 0:
            raise BadRotation("k reverses orientation (det = -1)")
        K.setflags(write=False)
        object.__setattr__(self, "matrix", K)
        object.__setattr__(self, "twist", float(self.twist))

    def __call__(self, v: np.ndarray) -> np.ndarray:
        w = np.asarray(v, dtype=float) @ self.matrix.T
        if self.twist == 0.0:
            return w
        phase = self.twist * w[..., 3]
        c, s = np.cos(phase), np.sin(phase)
        re, im = w[..., 0], w[..., 1]
        out = w.copy()
        out[..., 0] = c * re - s * im
        out[..., 1] = s * re + c * im
        return out

    def critical_value_split(self) -> float:
        """Chordal distance between h(k(0, i)) and h(k(0, -i))."""
        up = _hopf(self(np.array([0.0, 0.0, 0.0, 1.0])))
        down = _hopf(self(np.array([0.0, 0.0, 0.0, -1.0])))
        return float(np.linalg.norm(up - down))


IDENTITY_K = RotationK()
# rotate (0, i) a quarter turn toward Re z1, then twist by a half turn across Im w2
DEFAULT_K = RotationK(plane_rotation(0, 3, math.pi / 4), twist=math.pi / math.sqrt(2))


def _f_full_raw(k: RotationK) -> Callable:
    def raw(a):
        return _hopf(k(_suspension(a)))

    return raw


def f_full(p, k: RotationK | None = None):
    """The perturbed fibration h o k o Sh."""
    k = DEFAULT_K if k is None else k
    if not isinstance(k, RotationK):
        k = RotationK(k)
    split = k.critical_value_split()
    if split <= 1e-9:
        raise DegenerateK(f"h(k(0, i)) and h(k(0, -i)) coincide (distance {split:.3e})")
    return _wrap(_f_full_raw(k), p, 5, SpherePoint2, "f_full")


# -- map registry ----------------------------------------------------------------


def _resolve(map_id, k: RotationK | None = None):
    """Return ``(raw_map, domain_dim, target_dim)`` for a map name."""
    if map_id == "hopf":
        return _hopf, 4, 3
    if map_id == "suspension":
        return _suspension, 5, 4
    if map_id == "f1":
        return _f1, 5, 3
    if map_id == "f_full":
        k = DEFAULT_K if k is None else k
        if k.critical_value_split() <= 1e-9:
            raise DegenerateK("k leaves both critical values on one Hopf fiber")
        return _f_full_raw(k), 5, 3
    raise ValueError(f"unknown map {map_id!r}; choose hopf, suspension, f1 or f_full")


def random_sphere_points(n: int, dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal((n, dim))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def chordal_distance(a, b) -> float:
    a = a.to_array() if hasattr(a, "to_array") else np.asarray(a)
    b = b.to_array() if hasattr(b, "to_array") else np.asarray(b)
    return float(np.linalg.norm(a - b))


def _tangent_basis(P: np.ndarray) -> np.ndarray:
    """Orthonormal bases of the tangent spaces, shape (N, n-1, n)."""
    _, _, Vt = np.linalg.svd(P[:, None, :])
    return Vt[:, 1:, :]


def _tangent_jacobian(raw, P: np.ndarray, h: float) -> np.ndarray:
    """Differential restricted to domain and target tangent spaces, (N, d-1, n-1)."""
    N, n = P.shape
    T = _tangent_basis(P)
    # geodesic steps keep every sample on the sphere
    plus = np.cos(h) * P[:, None, :] + np.sin(h) * T
    minus = np.cos(h) * P[:, None, :] - np.sin(h) * T
    D = (raw(plus) - raw(minus)) / (2.0 * np.sin(h))  # (N, n-1, d)
    Y = raw(P)
    Y = Y / np.linalg.norm(Y, axis=-1, keepdims=True)
    B = _tangent_basis(Y)  # (N, d-1, d)
    return np.einsum("nij,nkj->nik", B, D)


def tangent_singular_values(map_id, P, h: float = FD_STEP, k: RotationK | None = None) -> np.ndarray:
    """Singular values of the tangent differential, descending, shape (N, r)."""
    raw, n, _ = _resolve(map_id, k)
    P = np.atleast_2d(np.asarray(P.to_array() if hasattr(P, "to_array") else P, dtype=float))
    return np.linalg.svd(_tangent_jacobian(raw, P, h), compute_uv=False)


def jacobian_rank(map_id, p, h: float = FD_STEP, tol_sv: float = TOL_SV, k: RotationK | None = None) -> int:
    """Rank of the differential at ``p`` (2 at regular points of a fibration)."""
    raw, n, _ = _resolve(map_id, k)
    arr = p.to_array() if hasattr(p, "to_array") else np.asarray(p, dtype=float)
    _check_unit(arr, map_id)
    if arr.shape != (n,):
        raise ValueError(f"{map_id} expects a point with {n} coordinates")
    sv = tangent_singular_values(map_id, arr, h, k)[0]
    return int(np.sum(sv > tol_sv))


# -- critical points -------------------------------------------------------------


@dataclass
class CriticalSearch:
    map_id: str
    n_seeds: int
    seed: int
    points: list
    final: np.ndarray
    objective: np.ndarray
    failures: list

    @property
    def converged(self) -> int:
        return self.n_seeds - len(self.failures)


def _objective(raw, P: np.ndarray, h: float) -> np.ndarray:
    sv = np.linalg.svd(_tangent_jacobian(raw, P, h), compute_uv=False)
    return sv[:, -1] ** 2


def _riemannian_gradient(raw, P: np.ndarray, h: float, delta: float) -> np.ndarray:
    N, n = P.shape
    T = _tangent_basis(P)
    plus = (np.cos(delta) * P[:, None, :] + np.sin(delta) * T).reshape(-1, n)
    minus = (np.cos(delta) * P[:, None, :] - np.sin(delta) * T).reshape(-1, n)
    both = _objective(raw, np.concatenate([plus, minus]), h)
    g = (both[: N * (n - 1)] - both[N * (n - 1):]).reshape(N, n - 1) / (2.0 * delta)
    return np.einsum("ni,nij->nj", g, T)


def search_critical_points(
    map_id,
    n_seeds: int = 200,
    seed: int = 0,
    *,
    k: RotationK | None = None,
    h: float = FD_STEP,
    tol: float = 1e-7,
    max_iter: int = 400,
    cluster_radius: float = 1e-3,
) -> CriticalSearch:
    """Minimise the smallest tangent singular value from random starts.

    Each start runs projected gradient descent with backtracking on the
    squared smallest singular value. Starts that reach ``tol`` are
    clustered; each cluster is represented by its best member.
    """
    raw, n, _ = _resolve(map_id, k)
    rng = np.random.default_rng(seed)
    P = random_sphere_points(n_seeds, n, rng)
    f = _objective(raw, P, h)
    step = np.full(n_seeds, 0.05)
    active = np.sqrt(f) > tol
    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        G = _riemannian_gradient(raw, P[idx], h, delta=1e-4)
        gnorm2 = np.sum(G * G, axis=1)
        stalled = gnorm2 < 1e-24
        alpha = step[idx].copy()
        accepted = np.zeros(idx.size, dtype=bool)
        newP = P[idx].copy()
        newf = f[idx].copy()
        for _ in range(30):
            todo = ~accepted & ~stalled
            if not todo.any():
                break
            trial = P[idx][todo] - alpha[todo, None] * G[todo]
            trial /= np.linalg.norm(trial, axis=1, keepdims=True)
            ft = _objective(raw, trial, h)
            ok = ft <= f[idx][todo] - 1e-4 * alpha[todo] * gnorm2[todo]
            where = np.flatnonzero(todo)
            newP[where[ok]] = trial[ok]
            newf[where[ok]] = ft[ok]
            accepted[where[ok]] = True
            alpha[where[~ok]] *= 0.5
        P[idx] = newP
        f[idx] = newf
        step[idx] = np.where(accepted, np.minimum(alpha * 2.0, 1.0), alpha)
        done = np.sqrt(f[idx]) <= tol
        dead = (~accepted & ~done) | stalled | (step[idx] < 1e-12)
        active[idx[done | dead]] = False

    sigma = np.sqrt(f)
    failures = [NoConvergence(i, float(sigma[i]), P[i].copy()) for i in np.flatnonzero(sigma > tol)]
    for fail in failures:
        log.debug("%s", fail)
    good = np.flatnonzero(sigma <= tol)
    clusters: list = []
    for i in good[np.argsort(sigma[good], kind="stable")]:
        if not any(np.linalg.norm(P[i] - P[c[0]]) < cluster_radius for c in clusters):
            clusters.append([i])
        else:
            next(c for c in clusters if np.linalg.norm(P[i] - P[c[0]]) < cluster_radius).append(i)
    # last coordinate first (x on S^4), rounded so noise cannot flip the order
    reps = sorted((P[c[0]].copy() for c in clusters), key=lambda v: tuple(-np.round(v[::-1], 6)))
    if n == 5:
        points = [SpherePoint4.from_array(v / np.linalg.norm(v)) for v in reps]
    else:
        points = [SpherePoint3.from_array(v / np.linalg.norm(v)) for v in reps]
    return CriticalSearch(str(map_id), n_seeds, seed, points, P, sigma, failures)


def find_critical_points(map_id, n_seeds: int = 200, seed: int = 0, **kwargs) -> list:
    """Cluster representatives of the critical set, found by descent."""
    return search_critical_points(map_id, n_seeds, seed, **kwargs).points


# -- fibers ------------------------------------------------------------------------


@dataclass(eq=False)
class FiberSample:
    """Converged points of a fiber, in start order."""

    map_id: str
    target: np.ndarray
    points: np.ndarray
    residuals: np.ndarray
    seed: int
    n_starts: int
    start_indices: np.ndarray

    @property
    def convergence_rate(self) -> float:
        return len(self.points) / self.n_starts if self.n_starts else 0.0

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        if not isinstance(other, FiberSample):
            return NotImplemented
        return (
            self.map_id == other.map_id
            and self.seed == other.seed
            and self.n_starts == other.n_starts
            and np.array_equal(self.target, other.target)
            and np.array_equal(self.points, other.points)
            and np.array_equal(self.residuals, other.residuals)
            and np.array_equal(self.start_indices, other.start_indices)
        )

    def sphere_points(self) -> list:
        return [SpherePoint4.from_array(p) for p in self.points]

    def to_json(self) -> dict:
        return {
            "map": self.map_id,
            "target": [float(v) for v in self.target],
            "seed": int(self.seed),
            "n_starts": int(self.n_starts),
            "points": [[float(v) for v in p] for p in self.points],
            "residuals": [float(r) for r in self.residuals],
            "start_indices": [int(i) for i in self.start_indices],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiberSample":
        return cls(
            data["map"],
            np.array(data["target"], dtype=float),
            np.array(data["points"], dtype=float).reshape(-1, 5),
            np.array(data["residuals"], dtype=float),
            int(data["seed"]),
            int(data["n_starts"]),
            np.array(data["start_indices"], dtype=int),
        )


def _ambient_jacobian(raw, P: np.ndarray, eps: float = 1e-7) -> np.ndarray:
    N, n = P.shape
    E = np.eye(n) * eps
    plus = (P[:, None, :] + E).reshape(-1, n)
    minus = (P[:, None, :] - E).reshape(-1, n)
    D = (raw(plus) - raw(minus)).reshape(N, n, -1) / (2.0 * eps)
    return np.swapaxes(D, 1, 2)


def sample_fiber(
    map_id,
    target,
    n: int,
    seed: int = 0,
    k: RotationK | None = None,
    *,
    tol_fiber: float = TOL_FIBER,
    max_iter: int = 100,
) -> FiberSample:
    """Project random points of S^4 onto the fiber over ``target``.

    The target sphere is charted by stereographic projection from the
    antipode of ``target``, which turns ``f(p) = target`` into two regular
    equations. Damped Gauss-Newton with least-norm steps solves them
    together with ``|p|^2 = 1``, renormalising after every step. Points
    whose residual ``|f(p) - target|`` ends at or below ``tol_fiber`` are
    kept, in start order.
    """
    raw, dim, tdim = _resolve(map_id, k)
    y = target.to_array() if hasattr(target, "to_array") else np.asarray(target, dtype=float)
    y = _check_unit(y, "fiber target")
    if y.shape != (tdim,):
        raise ValueError(f"target must have {tdim} coordinates")
    B = _tangent_basis(y[None, :])[0]

    def chart(X):
        U = raw(X)
        return (U @ B.T) / (1.0 + U @ y)[:, None]

    rng = np.random.default_rng(seed)
    P = random_sphere_points(n, dim, rng)
    R = chart(P)
    rn = np.linalg.norm(R, axis=1)
    active = np.linalg.norm(raw(P) - y, axis=1) > tol_fiber
    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        X = P[idx]
        J = np.concatenate([_ambient_jacobian(chart, X), 2.0 * X[:, None, :]], axis=1)
        full = np.concatenate([R[idx], (np.sum(X * X, axis=1) - 1.0)[:, None]], axis=1)
        step = -np.einsum("nij,nj->ni", np.linalg.pinv(J), full)
        alpha = np.ones(idx.size)
        accepted = np.zeros(idx.size, dtype=bool)
        for _ in range(20):
            todo = ~accepted
            if not todo.any():
                break
            trial = X[todo] + alpha[todo, None] * step[todo]
            trial /= np.linalg.norm(trial, axis=1, keepdims=True)
            rt = chart(trial)
            nt = np.linalg.norm(rt, axis=1)
            ok = nt < rn[idx][todo]
            where = np.flatnonzero(todo)
            P[idx[where[ok]]] = trial[ok]
            R[idx[where[ok]]] = rt[ok]
            rn[idx[where[ok]]] = nt[ok]
            accepted[where[ok]] = True
            alpha[where[~ok]] *= 0.5
        active[idx[~accepted]] = False
        active &= np.linalg.norm(raw(P) - y, axis=1) > tol_fiber

    fres = np.linalg.norm(raw(P) - y, axis=1)
    keep = np.flatnonzero(fres <= tol_fiber)
    log.info("fiber over %s: %d of %d starts converged", y, keep.size, n)
    return FiberSample(str(map_id), y.copy(), P[keep].copy(), fres[keep].copy(), int(seed), int(n), keep)


CSV_HEADER = ["re_z1", "im_z1", "re_z2", "im_z2", "x", "residual"]


def export_point_cloud(s: FiberSample, path, format: str = "csv") -> None:
    path = Path(path)
    try:
        if format == "csv":
            with path.open("w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(CSV_HEADER)
                for p, r in zip(s.points, s.residuals):
                    w.writerow([repr(float(v)) for v in p] + [repr(float(r))])
        elif format == "json":
            path.write_text(json.dumps(s.to_json()))
        else:
            raise ValueError(f"unknown format {format!r}")
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write point cloud to {path}: {exc.strerror}") from exc


def load_point_cloud(path) -> FiberSample:
    path = Path(path)
    try:
        return FiberSample.from_json(json.loads(path.read_text()))
    except OSError as exc:
        raise OSError(exc.errno, f"cannot read point cloud from {path}: {exc.strerror}") from exc


# -- verification suite ----------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    value: float
    threshold: float

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "value": self.value, "threshold": self.threshold}


def verify(n: int = 10_000, seed: int = 0, k: RotationK | None = None) -> list:
    """Run the numerical invariants of the fibration; one :class:`Check` each."""
    k = DEFAULT_K if k is None else k
    rng = np.random.default_rng(seed)
    P4 = random_sphere_points(n, 5, rng)
    P3 = random_sphere_points(n, 4, rng)

    def defect(Y):
        return float(np.max(np.abs(np.linalg.norm(Y, axis=1) - 1.0)))

    checks = []

    def le(name, value, threshold):
        checks.append(Check(name, bool(value <= threshold), float(value), threshold))

    def ge(name, value, threshold):
        checks.append(Check(name, bool(value >= threshold), float(value), threshold))

    le("hopf output on S^2", defect(_hopf(P3)), 1e-12)
    le("suspension output on S^3", defect(_suspension(P4)), 1e-12)
    le("f1 output on S^2", defect(_f1(P4)), 1e-12)
    le("f1 = h o Sh", float(np.max(np.abs(_f1(P4) - _hopf(_suspension(P4))))), 1e-12)
    theta = rng.uniform(0, 2 * np.pi, n)
    rot = np.zeros_like(P3)
    c, s = np.cos(theta), np.sin(theta)
    for j in (0, 2):
        rot[:, j] = c * P3[:, j] - s * P3[:, j + 1]
        rot[:, j + 1] = s * P3[:, j] + c * P3[:, j + 1]
    le("hopf circle invariance", float(np.max(np.abs(_hopf(rot) - _hopf(P3)))), 1e-12)
    le("f1(a+) = (0, -1)", float(np.max(np.abs(_f1(A_PLUS) - [0, 0, -1]))), 1e-15)
    le("f1(a-) = (0, -1)", float(np.max(np.abs(_f1(A_MINUS) - [0, 0, -1]))), 1e-15)
    sv = tangent_singular_values("f1", np.stack([A_PLUS, A_MINUS]), FD_STEP)
    le("min singular value of f1 at a+-", float(np.max(sv[:, -1])), 1e-6)
    mid = np.array([1 / math.sqrt(2), 0.0, 1 / math.sqrt(2), 0.0, 0.0])
    ge("min singular value of f1 at (1/sqrt2, 1/sqrt2, 0)", float(tangent_singular_values("f1", mid)[0, -1]), 0.1)
    raw = _f_full_raw(k)
    ge("f critical values apart (default k)", float(np.linalg.norm(raw(A_PLUS) - raw(A_MINUS))), 0.5)
    ident = _f_full_raw(IDENTITY_K)
    le("f critical values coincide (k = id)", float(np.linalg.norm(ident(A_PLUS) - ident(A_MINUS))), 1e-12)
    return checks
