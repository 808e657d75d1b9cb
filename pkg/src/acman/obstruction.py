"""Pseudo-holomorphic embedding and immersion decisions.

Every decision is computed from the numerical invariants of a descriptor and
comes with a ledger: the connectivity and homotopy-group facts that make the
relevant obstruction vanish (or not). The central invariant is

    I(M, J) = -1/2 <s_m(M, J), [M]>

where s_m is the top Segre class. For M^{2m} immersed in R^{4m} with complex
normal bundle, -2 I is the normal Euler number and I the algebraic count of
double points. Closed R^{4m} decisions report -2 I even on No: it is the
normal Euler number such an immersion would be forced to have.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .chern_algebra import pair, segre_polynomial
from .errors import IntegralityViolation, NotDivisible, OpenManifold
from .manifolds import FourManifoldDescriptor, ManifoldDescriptor

__all__ = [
    "Verdict",
    "HomotopyGroupValue",
    "Field",
    "LedgerEntry",
    "EmbeddingDecision",
    "invariant_I",
    "decide_embed_R_4m_plus_2",
    "decide_immerse_R_4m",
    "decide_embed_R_4m",
    "decide_embed_R6",
    "smooth_embed_R6",
    "obstruction_class_R6",
    "parallelizable_4mfd",
    "curvatura_integra",
    "bott_group",
    "stiefel_connectivity",
]


class Verdict(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    UNDETERMINED = "Undetermined"


class HomotopyGroupValue(str, enum.Enum):
    ZERO = "0"
    Z = "Z"
    Z2 = "Z2"
    UNKNOWN = "Unknown"


class Field(str, enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class LedgerEntry:
    space: str
    fact: int | HomotopyGroupValue | str
    role: str

    def to_json(self) -> dict:
        fact = self.fact.value if isinstance(self.fact, enum.Enum) else self.fact
        return {"space": self.space, "fact": fact, "role": self.role}


@dataclass(frozen=True)
class EmbeddingDecision:
    verdict: Verdict
    target: int
    invariant_I: int | None = None
    double_points: int | None = None
    normal_euler_number: int | None = None
    regular_homotopy_class: int | None = None
    ledger: tuple = ()
    citations: tuple = ()
    notes: tuple = field(default=())

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "target_dim": self.target,
            "I": self.invariant_I,
            "double_points": self.double_points,
            "normal_euler": self.normal_euler_number,
            "regular_homotopy_class": self.regular_homotopy_class,
            "ledger": [e.to_json() for e in self.ledger],
            "citations": list(self.citations),
            "notes": list(self.notes),
        }


# -- homotopy-theoretic facts ------------------------------------------------

_BOTT = {
    0: HomotopyGroupValue.Z2,
    1: HomotopyGroupValue.ZERO,
    2: HomotopyGroupValue.Z,
    3: HomotopyGroupValue.ZERO,
    4: HomotopyGroupValue.ZERO,
    5: HomotopyGroupValue.ZERO,
    6: HomotopyGroupValue.Z,
    7: HomotopyGroupValue.Z2,
}


def bott_group(k: int, n: int) -> HomotopyGroupValue:
    """pi_k of Gamma(n) = SO(2n)/U(n); Unknown outside the stable range k <= 2n-2."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if k > 2 * n - 2:
        return HomotopyGroupValue.UNKNOWN
    return _BOTT[k % 8]


def stiefel_connectivity(field: Field | str, m: int, n: int) -> int:
    """Connectivity of the Stiefel manifold of m-frames in R^n or C^n."""
    field = Field(field)
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    if field is Field.REAL:
        return n - m - 1
    return 2 * (n - m)


def _stiefel_entry(field: Field, m: int, n: int, role: str) -> LedgerEntry:
    name = "V_{%d}(%s^{%d})" % (m, "R" if field is Field.REAL else "C", n)
    return LedgerEntry(name, stiefel_connectivity(field, m, n), role)


# -- the invariant I ---------------------------------------------------------


def _require_closed(M):
    if not M.closed:
        raise OpenManifold(f"{M.name} is open: no fundamental class to pair against")


def segre_number(M: ManifoldDescriptor) -> Fraction:
    """<s_m(M, J), [M]>."""
    _require_closed(M)
    return pair(segre_polynomial(M.m), M.table, M.m)


def invariant_I(M: ManifoldDescriptor) -> int:
    value = -segre_number(M) / 2
    if value.denominator != 1:
        raise IntegralityViolation(
            f"<s_{M.m}, [M]> = {-2 * value} is odd, so I = {value} is not an integer; "
            "the normal Euler number of an immersion must be even"
        )
    return int(value)


# -- decisions for Chern-table descriptors ----------------------------------


def decide_embed_R_4m_plus_2(M: ManifoldDescriptor) -> EmbeddingDecision:
    m = M.m
    ledger = (
        _stiefel_entry(Field.COMPLEX, m, 2 * m + 1, "complex monomorphisms TM -> C^{2m+1} exist and are unique up to homotopy"),
        _stiefel_entry(Field.REAL, 2 * m, 4 * m + 2, "all monomorphisms covering a Whitney embedding are homotopic to Tf"),
    )
    return EmbeddingDecision(
        Verdict.YES,
        4 * m + 2,
        ledger=ledger,
        citations=("embedding-R4m+2", "whitney-embedding"),
    )


def _r4m_ledger(m: int) -> tuple:
    return (
        _stiefel_entry(Field.COMPLEX, m, 2 * m, "a complex monomorphism TM -> C^{2m} exists"),
        _stiefel_entry(Field.REAL, 2 * m, 4 * m, "single obstruction in H^{2m}(M; pi_{2m} V) = Z"),
        LedgerEntry("pi_{%d}(V_{%d}(R^{%d}))" % (2 * m, 2 * m, 4 * m), HomotopyGroupValue.Z,
                    "regular homotopy classes of immersions indexed by self-intersection"),
    )


def decide_immerse_R_4m(M: ManifoldDescriptor) -> EmbeddingDecision:
    I = invariant_I(M)
    m = M.m
    ledger = _r4m_ledger(m)
    citations = ("immersion-R4m-segre", "hirsch-smale", "whitney-normal-euler")
    if I >= 0:
        return EmbeddingDecision(
            Verdict.YES, 4 * m, I, I, -2 * I, I, ledger, citations,
            notes=(f"self-transverse immersion with exactly {I} double points, all positive",),
        )
    ledger += (LedgerEntry("I(M,J)", I, f"I = {I} < 0 violates I >= 0: the normal Euler number -2I = {-2 * I} cannot come from a complex normal bundle"),)
    return EmbeddingDecision(Verdict.NO, 4 * m, I, normal_euler_number=-2 * I, ledger=ledger, citations=citations)


def decide_embed_R_4m(M: ManifoldDescriptor) -> EmbeddingDecision:
    m = M.m
    if not M.closed:
        ledger = (
            _stiefel_entry(Field.REAL, 2 * m, 4 * m,
                           "open M retracts to its (2m-1)-skeleton, so Mon(TM, TR^{4m}) is path-connected"),
        )
        return EmbeddingDecision(Verdict.YES, 4 * m, ledger=ledger, citations=("open-manifold-embedding-R4m",))
    I = invariant_I(M)
    ledger = _r4m_ledger(m)
    citations = ("immersion-R4m-segre", "hirsch-smale", "whitney-normal-euler")
    if I == 0:
        return EmbeddingDecision(Verdict.YES, 4 * m, 0, 0, 0, 0, ledger, citations)
    ledger += (LedgerEntry("I(M,J)", I, f"I = {I} != 0: every pseudo-holomorphic immersion has double points or none exists"),)
    return EmbeddingDecision(Verdict.NO, 4 * m, I, normal_euler_number=-2 * I, ledger=ledger, citations=citations)


# -- four-manifolds in R^6 ---------------------------------------------------


def obstruction_class_R6(M: FourManifoldDescriptor) -> tuple:
    """The class Omega with 2 Omega = c1, in the basis of ``M.c1``."""
    odd = [i for i, v in enumerate(M.c1) if v % 2]
    if odd:
        raise NotDivisible(f"c1 has odd coordinates at {odd}; c1 is not twice a class")
    return tuple(v // 2 for v in M.c1)


def _gamma3_ledger() -> tuple:
    roles = {
        1: "Gamma(3) connected and simply connected",
        2: "only obstruction Omega in H^2(M; Z), with 2 Omega = c1",
        3: "extension over the 3-skeleton is free",
        4: "extension over the 4-skeleton is free",
    }
    return tuple(LedgerEntry("pi_%d(Gamma(3))" % i, bott_group(i, 3), roles[i]) for i in range(1, 5))


def decide_embed_R6(M: FourManifoldDescriptor) -> EmbeddingDecision:
    _require_closed(M)
    citations = ("embedding-R6-four-manifolds", "cappell-shaneson")
    ledger = _gamma3_ledger()
    if not M.torsion_free:
        note = "H^2(M) may have 2-torsion; the criterion does not apply"
        return EmbeddingDecision(Verdict.UNDETERMINED, 6, ledger=ledger, citations=citations, notes=(note,))
    try:
        omega = obstruction_class_R6(M)
        ledger += (LedgerEntry("Omega", "0" if not any(omega) else str(list(omega)), "obstruction class, c1 / 2"),)
    except NotDivisible:
        ledger += (LedgerEntry("Omega", "nonzero", "c1 is not even, so 2 Omega = c1 forces Omega != 0"),)
    ledger += (
        LedgerEntry("sigma(M)", M.signature, "must vanish"),
        LedgerEntry("chi(M)", M.euler, "must vanish: chi = <c2, [M]> and c(M) = 1"),
    )
    ok = M.signature == 0 and M.euler == 0 and M.c1_zero
    notes = []
    if M.signature:
        notes.append(f"sigma = {M.signature} != 0")
    if M.euler:
        notes.append(f"chi = {M.euler} != 0")
    if not M.c1_zero:
        notes.append(f"c1 = {list(M.c1)} != 0")
    return EmbeddingDecision(Verdict.YES if ok else Verdict.NO, 6, ledger=ledger, citations=citations, notes=tuple(notes))


def smooth_embed_R6(M: FourManifoldDescriptor) -> EmbeddingDecision:
    """Smooth embeddability: w2 = 0 and sigma = 0."""
    _require_closed(M)
    ok = M.w2_zero and M.signature == 0
    ledger = (
        LedgerEntry("w2(M)", 0 if M.w2_zero else 1, "w2 = c1 mod 2 must vanish"),
        LedgerEntry("sigma(M)", M.signature, "must vanish"),
    )
    return EmbeddingDecision(Verdict.YES if ok else Verdict.NO, 6, ledger=ledger, citations=("cappell-shaneson",))


def parallelizable_4mfd(M: FourManifoldDescriptor) -> bool:
    _require_closed(M)
    return M.w2_zero and M.signature == 0 and M.euler == 0


def curvatura_integra(M: ManifoldDescriptor) -> int:
    """Generalised curvatura integra chi/2 of M^{2m} in codimension two."""
    chi = M.euler
    if chi % 2:
        raise IntegralityViolation(f"chi = {chi} is odd")
    return chi // 2
