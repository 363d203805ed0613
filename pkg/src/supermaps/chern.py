"""Characteristic classes of split bundles in ``H^*(P^m, Q) = Q[h]/(h^(m+1))``."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Sequence, Tuple

from .sheafcalc import BundleSum, dualize


class CohClass:
    """Truncated polynomial ``c_0 + c_1 h + ... + c_m h^m`` with rational coefficients."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence = (1,)):
        if m < 0:
            raise ValueError("m must be non-negative")
        cs = [Fraction(c) for c in coeffs[: m + 1]]
        cs += [Fraction(0)] * (m + 1 - len(cs))
        self.m = m
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def one(cls, m):
        return cls(m, (1,))

    @classmethod
    def hyperplane(cls, m):
        return cls(m, (0, 1))

    def _same(self, other):
        if not isinstance(other, CohClass):
            return CohClass(self.m, (other,))
        if other.m != self.m:
            raise ValueError(f"classes on P^{self.m} and P^{other.m} cannot be combined")
        return other

    def __add__(self, other):
        other = self._same(other)
        return CohClass(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        other = self._same(other)
        out = [Fraction(0)] * (self.m + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.m + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return CohClass(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        out = CohClass.one(self.m)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CohClass):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == CohClass(self.m, (other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def degree_part(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.m else Fraction(0)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
            mag = abs(c)
            if mon and mag == 1:
                text = mon
            elif mon:
                text = f"{mag}*{mon}"
            else:
                text = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"CohClass({self.m}, {str(self)!r})"


def _base(V: BundleSum, m) -> int:
    return V.base_dim if m is None else m


def linear_class(a, m: int) -> CohClass:
    """``1 + a h``, the total Chern class of ``O(a)``."""
    return CohClass(m, (1, a))


def total_chern(V: BundleSum, m: int = None) -> CohClass:
    m = _base(V, m)
    out = CohClass.one(m)
    for a in V.twists:
        out = out * linear_class(a, m)
    return out


def exterior_roots(V: BundleSum, k: int) -> Tuple[int, ...]:
    """Chern roots of ``wedge^k V``: sums over ``k``-subsets of the roots of ``V``."""
    if not 0 <= k <= V.rank:
        raise ValueError(f"exterior power {k} out of range 0..{V.rank}")
    return tuple(sum(s) for s in combinations(V.twists, k))


def chern_exterior(V: BundleSum, k: int, m: int = None) -> CohClass:
    return total_chern(BundleSum(exterior_roots(V, k), _base(V, m)), _base(V, m))


@lru_cache(maxsize=None)
def todd_series(order: int) -> Tuple[Fraction, ...]:
    """Coefficients of ``t / (1 - e^(-t))`` up to ``t^order``.

    Obtained by inverting ``(1 - e^(-t)) / t = sum (-1)^k t^k / (k+1)!``.
    """
    f = [Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)]
    g = [Fraction(0)] * (order + 1)
    g[0] = 1 / f[0]
    for k in range(1, order + 1):
        g[k] = -sum(f[j] * g[k - j] for j in range(1, k + 1)) / f[0]
    return tuple(g)


def todd_line(a, m: int) -> CohClass:
    """``Q(a h)`` with ``Q(t) = t / (1 - e^(-t))``."""
    series = todd_series(max(m, 16))
    return CohClass(m, [series[k] * Fraction(a) ** k for k in range(m + 1)])


def todd(V: BundleSum, m: int = None) -> CohClass:
    m = _base(V, m)
    out = CohClass.one(m)
    for a in V.twists:
        out = out * todd_line(a, m)
    return out


def tangent_roots(m: int) -> BundleSum:
    """Euler-sequence roots of ``T_{P^m}``: ``m + 1`` copies of ``O(1)`` (the trivial summand has root 0)."""
    return BundleSum((1,) * (m + 1), m)


def todd_tangent(m: int) -> CohClass:
    """
    >>> print(todd_tangent(2))
    1 + 3/2*h + h^2
    """
    return todd(tangent_roots(m), m)


def chern_character(V: BundleSum, m: int = None) -> CohClass:
    """``sum_i exp(a_i h)``."""
    m = _base(V, m)
    out = CohClass(m, (0,))
    for a in V.twists:
        out = out + CohClass(m, [Fraction(a) ** k / factorial(k) for k in range(m + 1)])
    return out


def invert(c: CohClass) -> CohClass:
    if not c.coeffs[0]:
        raise ZeroDivisionError(f"{c} has zero constant term and is not a unit")
    inv = [Fraction(0)] * (c.m + 1)
    inv[0] = 1 / c.coeffs[0]
    for k in range(1, c.m + 1):
        inv[k] = -sum(c.coeffs[j] * inv[k - j] for j in range(1, k + 1)) / c.coeffs[0]
    return CohClass(c.m, inv)


def integrate(c: CohClass) -> Fraction:
    """Pairing with the fundamental class of ``P^m``: the ``h^m`` coefficient."""
    return c.coeffs[c.m]


def kfc_demo(V: BundleSum, m: int = None) -> CohClass:
    """Formal stand-in for the fundamental-class formula on the base ``P^m``.

    With ``W = V^dual`` playing the role of ``Q`` this returns
    ``c(sum_k (-1)^k wedge^k W) * Td(T_{P^m})^(-1)``, the Chern class of the
    alternating sum being ``prod_k c(wedge^k W)^((-1)^k)``.  This is only a
    demonstration on projective space, not a class on a moduli stack.
    """
    m = _base(V, m)
    W = dualize(BundleSum(V.twists, m))
    alt = CohClass.one(m)
    for k in range(W.rank + 1):
        ck = chern_exterior(W, k, m)
        alt = alt * (ck if k % 2 == 0 else invert(ck))
    return alt * invert(todd_tangent(m))
