"""Manifold descriptors built from numerical invariants only.

Two kinds of descriptor exist:

* :class:`ManifoldDescriptor` -- an almost complex 2m-manifold given by its
  table of Chern numbers.
* :class:`FourManifoldDescriptor` -- a closed oriented 4-manifold given by
  its intersection form on H^2/torsion, the first Chern class in the same
  basis, and the Euler characteristic.

Intersection-form arithmetic is exact (Fractions); floating point is never
used to decide a signature.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, prod
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

import jsonschema

from .chern_algebra import Partition, partitions
from .errors import (
    DescriptorError,
    NotCharacteristic,
    NotSymmetric,
    NotUnimodular,
    OpenManifold,
    SignatureMismatch,
)
from .schemas import DESCRIPTOR_SCHEMA

__all__ = [
    "ChernNumberTable",
    "ManifoldDescriptor",
    "FourManifoldDescriptor",
    "riemann_surface",
    "projective_space",
    "torus",
    "product",
    "signature",
    "determinant",
    "four_manifold",
    "connected_sum",
    "E8",
    "HYPERBOLIC",
    "block_sum",
    "catalog",
    "catalog_names",
    "descriptor_from_json",
    "descriptor_to_json",
    "load_descriptor",
]


class ChernNumberTable(Mapping):
    """Chern numbers of a closed almost complex manifold of complex dim ``m``.

    Keys are partitions of ``m``; values are plain integers. The Euler
    characteristic is the entry at ``(m,)``.
    """

    def __init__(self, m: int, entries: Mapping | None = None):
        if m < 1:
            raise DescriptorError("complex dimension must be positive", "m")
        self.m = int(m)
        clean = {}
        for key, value in (entries or {}).items():
            lam = Partition(key)
            if lam.weight != m:
                raise DescriptorError(
                    f"partition {list(lam)} has weight {lam.weight}, expected {m}",
                    f"entries.{list(lam)}",
                )
            if isinstance(value, bool) or int(value) != value:
                raise DescriptorError("Chern numbers must be integers", f"entries.{list(lam)}")
            clean[lam] = int(value)
        self._entries = MappingProxyType(clean)

    def __getitem__(self, key):
        return self._entries[Partition(key)]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, ChernNumberTable):
            return NotImplemented
        return self.m == other.m and dict(self._entries) == dict(other._entries)

    def __hash__(self):
        return hash((self.m, frozenset(self._entries.items())))

    def __repr__(self):
        body = ", ".join(f"{list(k)}: {v}" for k, v in self.items())
        return f"ChernNumberTable(m={self.m}, {{{body}}})"

    @property
    def is_complete(self) -> bool:
        return set(self._entries) == set(partitions(self.m))

    def missing(self) -> list:
        return [lam for lam in partitions(self.m) if lam not in self._entries]

    @property
    def euler(self) -> int:
        return self[(self.m,)]


@dataclass(frozen=True)
class ManifoldDescriptor:
    """A closed (or open) almost complex manifold, oriented by J."""

    name: str
    table: ChernNumberTable
    closed: bool = True

    def __post_init__(self):
        if self.closed and not self.table.is_complete:
            missing = [list(p) for p in self.table.missing()]
            raise DescriptorError(f"closed manifold needs every Chern number; missing {missing}", "entries")

    @property
    def m(self) -> int:
        return self.table.m

    @property
    def real_dim(self) -> int:
        return 2 * self.table.m

    @property
    def euler(self) -> int:
        if not self.closed:
            raise OpenManifold(f"{self.name} is open; it has no Euler number here")
        return self.table.euler


def riemann_surface(g: int) -> ManifoldDescriptor:
    if g < 0:
        raise ValueError("genus must be non-negative")
    return ManifoldDescriptor(f"sigma{g}", ChernNumberTable(1, {(1,): 2 - 2 * g}))


def projective_space(m: int) -> ManifoldDescriptor:
    """CP^m, from c = (1 + x)^(m+1) with <x^m, [CP^m]> = 1."""
    if m < 1:
        raise ValueError("m must be positive")
    entries = {lam: prod(comb(m + 1, part) for part in lam) for lam in partitions(m)}
    return ManifoldDescriptor(f"cp{m}", ChernNumberTable(m, entries))


def torus(m: int) -> ManifoldDescriptor:
    """The real 2m-torus; its complex tangent bundle is trivial."""
    if m < 1:
        raise ValueError("m must be positive")
    return ManifoldDescriptor(f"torus{m}", ChernNumberTable(m, {lam: 0 for lam in partitions(m)}))


def _product_number(lam: Partition, A: ChernNumberTable, B: ChernNumberTable) -> int:
    # c_k(AxB) = sum_{i+j=k} c_i(A) c_j(B); distribute over the parts of lam
    total = 0
    for split in itertools.product(*(range(part + 1) for part in lam)):
        if sum(split) != A.m:
            continue
        left = Partition(i for i in split if i)
        right = Partition(part - i for part, i in zip(lam, split) if part - i)
        total += A[left] * B[right]
    return total


def product(A: ManifoldDescriptor, B: ManifoldDescriptor) -> ManifoldDescriptor:
    """Cartesian product, via the Whitney product formula and Kunneth."""
    for X in (A, B):
        if not X.closed:
            raise OpenManifold(f"{X.name} is open")
    m = A.m + B.m
    entries = {lam: _product_number(lam, A.table, B.table) for lam in partitions(m)}
    return ManifoldDescriptor(f"{A.name}x{B.name}", ChernNumberTable(m, entries))


# -- exact quadratic-form arithmetic -------------------------------------


def _as_square(Q) -> list:
    rows = [list(r) for r in Q]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSymmetric("intersection form must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"Q[{i}][{j}] = {rows[i][j]} but Q[{j}][{i}] = {rows[j][i]}")
    return rows


def congruent_diagonal(Q) -> list:
    """Diagonal of a form congruent to ``Q`` over the rationals.

    Every basis change used is unimodular (adding one basis vector to
    another), so the product of the result equals ``det Q``.
    """
    A = [[Fraction(v) for v in row] for row in _as_square(Q)]
    diag = []
    while A:
        n = len(A)
        p = next((i for i in range(n) if A[i][i] != 0), None)
        if p is None:
            pair_ = next(((i, j) for i in range(n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if pair_ is None:
                diag.extend([Fraction(0)] * n)
                break
            i, j = pair_
            # e_i -> e_i + e_j turns a hyperbolic block into a diagonal pivot
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            p = i
        piv = A[p][p]
        for k in range(n):
            if k == p or A[k][p] == 0:
                continue
            f = A[k][p] / piv
            for col in range(n):
                A[k][col] -= f * A[p][col]
            for row in range(n):
                A[row][k] -= f * A[row][p]
        diag.append(piv)
        A = [[A[r][c] for c in range(n) if c != p] for r in range(n) if r != p]
    return diag


def signature(Q) -> int:
    """Positive minus negative eigenvalue count, computed exactly."""
    d = congruent_diagonal(Q)
    return sum(1 for v in d if v > 0) - sum(1 for v in d if v < 0)


def determinant(Q) -> int:
    det = prod(congruent_diagonal(Q), start=Fraction(1))
    assert det.denominator == 1
    return int(det)


def block_sum(*blocks) -> tuple:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = int(v)
        off += len(b)
    return tuple(tuple(r) for r in out)


def _e8() -> tuple:
    # Cartan matrix: chain 0-1-2-3-4-5-6 with node 7 hung on node 4
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
    M = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        M[i][j] = M[j][i] = -1
    return tuple(tuple(r) for r in M)


E8 = _e8()
HYPERBOLIC = ((0, 1), (1, 0))


@dataclass(frozen=True)
class FourManifoldDescriptor:
    """Closed oriented 4-manifold with an almost complex c1.

    Construction validates the data: symmetry of ``Q``, unimodularity when
    closed and torsion-free, that ``c1`` is characteristic, and (when
    closed) Hirzebruch's relation ``c1^2 - 2 chi = 3 sigma``.
    """

    name: str
    Q: tuple
    c1: tuple
    euler: int
    torsion_free: bool = True
    closed: bool = True
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        Q = tuple(tuple(int(v) for v in row) for row in _as_square(self.Q))
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "c1", tuple(int(v) for v in self.c1))
        object.__setattr__(self, "euler", int(self.euler))
        b2 = len(Q)
        if len(self.c1) != b2:
            raise DescriptorError(f"c1 has length {len(self.c1)}, expected b2 = {b2}", "c1")
        if self.validate:
            self.check()

    def check(self) -> None:
        """Raise if the data cannot come from a closed almost complex 4-manifold."""
        Q = self.Q
        b2 = len(Q)
        if self.closed and self.torsion_free and abs(determinant(Q)) != 1:
            raise NotUnimodular(f"|det Q| = {abs(determinant(Q))} for a closed torsion-free manifold")
        Qc = self._apply(self.c1)
        for i in range(b2):
            if (Qc[i] - Q[i][i]) % 2:
                raise NotCharacteristic(f"c1 . e{i} = {Qc[i]} but e{i} . e{i} = {Q[i][i]} (mod 2 mismatch)")
        if self.closed and self.c1_squared - 2 * self.euler != 3 * self.signature:
            raise SignatureMismatch(
                f"c1^2 - 2 chi = {self.c1_squared - 2 * self.euler} "
                f"but 3 sigma = {3 * self.signature}"
            )

    def _apply(self, v) -> list:
        return [sum(q * x for q, x in zip(row, v)) for row in self.Q]

    @property
    def b2(self) -> int:
        return len(self.Q)

    @cached_property
    def signature(self) -> int:
        return signature(self.Q)

    @cached_property
    def c1_squared(self) -> int:
        return sum(a * b for a, b in zip(self.c1, self._apply(self.c1)))

    @property
    def w2_zero(self) -> bool:
        """``w2 = c1 mod 2`` vanishes; exact when H^2 has no 2-torsion."""
        return all(v % 2 == 0 for v in self.c1)

    @property
    def c1_zero(self) -> bool:
        return not any(self.c1)

    def chern_table(self) -> ManifoldDescriptor:
        """Chern numbers (c1^2, c2) as a complex-dimension-2 descriptor."""
        if not self.closed:
            raise OpenManifold(f"{self.name} is open")
        return ManifoldDescriptor(self.name, ChernNumberTable(2, {(1, 1): self.c1_squared, (2,): self.euler}))


def four_manifold(name, Q, c1, euler, torsion_free=True, closed=True) -> FourManifoldDescriptor:
    return FourManifoldDescriptor(name, Q, c1, euler, torsion_free, closed)


def connected_sum(A: FourManifoldDescriptor, B: FourManifoldDescriptor, validate: bool = True) -> FourManifoldDescriptor:
    """Formal connected sum; validation is re-run on the combined data.

    A successful return does not claim the sum carries an almost complex
    structure, only that the necessary arithmetic still holds. Since
    ``c1^2 - 2 chi - 3 sigma`` grows by 4 under the sum, two validated
    summands always fail Hirzebruch's relation; pass ``validate=False`` to
    inspect the formal data anyway.
    """
    for X in (A, B):
        if not X.closed:
            raise OpenManifold(f"{X.name} is open")
    return FourManifoldDescriptor(
        f"{A.name}#{B.name}",
        block_sum(A.Q, B.Q),
        A.c1 + B.c1,
        A.euler + B.euler - 2,
        A.torsion_free and B.torsion_free,
        True,
        validate,
    )


# -- catalog ----------------------------------------------------------------


def _four_catalog() -> dict:
    H = HYPERBOLIC
    negE8 = tuple(tuple(-v for v in row) for row in E8)
    return {
        "T4": lambda: four_manifold("T4", block_sum(H, H, H), (0,) * 6, 0),
        "K3": lambda: four_manifold("K3", block_sum(negE8, negE8, H, H, H), (0,) * 22, 24),
        "S2xS2": lambda: four_manifold("S2xS2", H, (2, 2), 4),
        "CP2": lambda: four_manifold("CP2", ((1,),), (3,), 3),
    }


def catalog() -> dict:
    """Name -> zero-argument factory for every shipped descriptor."""
    out = {}
    for g in range(11):
        out[f"sigma{g}"] = lambda g=g: riemann_surface(g)
    for m in range(1, 7):
        out[f"cp{m}"] = lambda m=m: projective_space(m)
    for m in range(1, 7):
        out[f"torus{m}"] = lambda m=m: torus(m)
    out.update(_four_catalog())
    return out


def catalog_names() -> list:
    return list(catalog())


# -- JSON ---------------------------------------------------------------------


def descriptor_to_json(d) -> dict:
    if isinstance(d, FourManifoldDescriptor):
        return {
            "kind": "four_manifold",
            "name": d.name,
            "closed": d.closed,
            "Q": [list(r) for r in d.Q],
            "c1": list(d.c1),
            "euler": d.euler,
            "torsion_free": d.torsion_free,
        }
    return {
        "kind": "chern_table",
        "name": d.name,
        "m": d.m,
        "closed": d.closed,
        "entries": {json.dumps(list(lam), separators=(",", ":")): v for lam, v in d.table.items()},
    }


def _schema_path(err) -> str:
    path = ""
    for p in err.absolute_path:
        path += f"[{p}]" if isinstance(p, int) else (f".{p}" if path else str(p))
    return path


def descriptor_from_json(data: dict):
    """Build a descriptor from its JSON form; errors carry a field path."""
    if isinstance(data, dict) and "kind" not in data and "Q" in data:
        data = {**data, "kind": "four_manifold"}
    validator = jsonschema.Draft202012Validator(DESCRIPTOR_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: len(list(e.absolute_path)), reverse=True)
    if errors:
        err = errors[0]
        raise DescriptorError(err.message, _schema_path(err))
    name = data.get("name", "unnamed")
    closed = data.get("closed", True)
    if data["kind"] == "four_manifold":
        return four_manifold(name, data["Q"], data["c1"], data["euler"], data["torsion_free"], closed)
    entries = {}
    for key, value in data.get("entries", {}).items():
        try:
            parts = json.loads(key)
            lam = Partition(parts)
            if not isinstance(parts, list) or list(lam) != parts:
                raise ValueError
        except (ValueError, TypeError):
            raise DescriptorError("partition keys must be descending arrays of positive integers", f"entries.{key}") from None
        entries[lam] = value
    return ManifoldDescriptor(name, ChernNumberTable(data["m"], entries), closed)


def load_descriptor(path) -> ManifoldDescriptor | FourManifoldDescriptor:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"{path}: invalid JSON ({exc})") from None
    return descriptor_from_json(data)
