"""Exact arithmetic on polynomials in formal Chern classes.

A monomial ``c_{l1} c_{l2} ... c_{lr}`` is keyed by the integer partition
``(l1, l2, ..., lr)`` sorted non-increasingly; the constant monomial is the
empty partition. The grading is the complex degree, i.e. the weight of the
partition. Coefficients are :class:`fractions.Fraction` so that pairings
against fundamental classes stay exact.

The total Segre class is the inverse of the total Chern class, ``s = c^-1``,
and its homogeneous pieces are computed by the recursion::

    s_0 = 1,    s_k = - sum_{i=1..k} c_i s_{k-i}
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import MissingChernNumber

__all__ = [
    "Partition",
    "ChernPolynomial",
    "partitions",
    "multiply",
    "segre_polynomial",
    "total_chern",
    "pair",
]


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    The constructor canonicalises the order, so ``Partition([1, 2])`` and
    ``Partition([2, 1])`` are the same key.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def __add__(self, other):
        # sorted concatenation, i.e. the monomial product
        return Partition(tuple(self) + tuple(other))

    def __repr__(self):
        return f"Partition({list(self)})"


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, in descending lexicographic order."""
    if n < 0:
        return
    if largest is None:
        largest = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("ChernPolynomial coefficients must be exact")
    return Fraction(value)


class ChernPolynomial:
    """Immutable polynomial in the formal classes c_1, c_2, ...

    ``terms`` maps :class:`Partition` to a non-zero Fraction. Terms of
    different weights may coexist; :meth:`homogeneous` extracts one grade.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for key, coeff in (terms or {}).items():
            key = Partition(key)
            coeff = _coerce(coeff)
            if coeff:
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if not clean[key]:
                    del clean[key]
        self._terms = MappingProxyType(clean)

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return self._terms

    @classmethod
    def one(cls) -> "ChernPolynomial":
        return cls({Partition(): 1})

    @classmethod
    def zero(cls) -> "ChernPolynomial":
        return cls()

    @classmethod
    def c(cls, i: int) -> "ChernPolynomial":
        """The single class ``c_i``; ``c(0)`` is the unit."""
        if i < 0:
            raise ValueError("Chern class index must be non-negative")
        return cls({Partition((i,) if i else ()): 1})

    def homogeneous(self, k: int) -> "ChernPolynomial":
        return ChernPolynomial({p: a for p, a in self._terms.items() if p.weight == k})

    def truncate(self, k: int) -> "ChernPolynomial":
        """Drop every term of weight greater than ``k``."""
        return ChernPolynomial({p: a for p, a in self._terms.items() if p.weight <= k})

    def weights(self) -> set:
        return {p.weight for p in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._terms.values())

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for p, a in other._terms.items():
            out[p] = out.get(p, Fraction(0)) + a
        return ChernPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return ChernPolynomial({p: -a for p, a in self._terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"ChernPolynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def _as_poly(value):
    if isinstance(value, ChernPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return ChernPolynomial({Partition(): value})
    return NotImplemented


def multiply(p: ChernPolynomial, q: ChernPolynomial) -> ChernPolynomial:
    """Distributive product; monomials multiply by sorted concatenation."""
    out: dict = {}
    for lam, a in p.terms.items():
        for mu, b in q.terms.items():
            key = lam + mu
            out[key] = out.get(key, Fraction(0)) + a * b
    return ChernPolynomial(out)


def total_chern(k: int) -> ChernPolynomial:
    """``1 + c_1 + ... + c_k``."""
    return ChernPolynomial({Partition((i,) if i else ()): 1 for i in range(k + 1)})


@lru_cache(maxsize=None)
def segre_polynomial(k: int) -> ChernPolynomial:
    """Universal polynomial expressing s_k in c_1, ..., c_k.

    >>> str(segre_polynomial(2))
    'c1^2 - c2'
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return ChernPolynomial.one()
    acc = ChernPolynomial.zero()
    for i in range(1, k + 1):
        acc = acc + ChernPolynomial.c(i) * segre_polynomial(k - i)
    return -acc


def pair(p: ChernPolynomial, table: Mapping, m: int) -> Fraction:
    """Evaluate the weight-``m`` part of ``p`` against a Chern-number table.

    ``table`` maps partitions of ``m`` to Chern numbers. Terms of any other
    weight contribute nothing.
    """
    total = Fraction(0)
    for lam, coeff in p.terms.items():
        if lam.weight != m:
            continue
        try:
            value = table[lam]
        except KeyError:
            raise MissingChernNumber(lam) from None
        total += coeff * value
    return total


def _monomial_str(lam: Partition) -> str:
    factors = []
    for i in sorted(set(lam)):
        e = lam.count(i)
        factors.append(f"c{i}" if e == 1 else f"c{i}^{e}")
    return "*".join(factors)


def format_polynomial(p: ChernPolynomial) -> str:
    """Human-readable form, e.g. ``-c1^3 + 2*c1*c2 - c3``.

    Terms are sorted by weight, then lexicographically ascending on the
    partition, so ``c1^2`` precedes ``c2``.
    """
    if p.is_zero():
        return "0"
    pieces = []
    for lam in sorted(p.terms, key=lambda q: (q.weight, tuple(q))):
        a = p.terms[lam]
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        mono = _monomial_str(lam)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
