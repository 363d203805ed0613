"""Cohomology of sums of line bundles on P^1 and their pullbacks.

A split bundle ``O(a_1) + ... + O(a_r)`` is recorded by its multiset of
twists.  For a degree-``d`` map ``P^1 -> P^m`` the pullback of ``O(a)`` is
``O(a*d)``, and on ``P^1``::

    h0(O(k)) = max(k + 1, 0),   h1(O(k)) = max(-k - 1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True)
class BundleSum:
    """Sum of line bundles ``O(a_i)`` on ``P^base_dim``; twists kept sorted."""

    twists: Tuple[int, ...] = ()
    base_dim: int = 1

    def __post_init__(self):
        twists = tuple(sorted(int(a) for a in self.twists))
        object.__setattr__(self, "twists", twists)
        if self.base_dim < 0:
            raise ValueError(f"base dimension must be non-negative, got {self.base_dim}")

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def first_chern(self) -> int:
        return sum(self.twists)

    def __add__(self, other: "BundleSum") -> "BundleSum":
        if other.base_dim != self.base_dim:
            raise ValueError("bundles live on different bases")
        return BundleSum(self.twists + other.twists, self.base_dim)

    def __str__(self):
        if not self.twists:
            return "0"
        return " + ".join(f"O({a})" for a in self.twists)


@dataclass(frozen=True)
class MapDatum:
    """Degree of a map from a genus-0 curve, i.e. the class ``d`` times a line."""

    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"map degree must be non-negative, got {self.degree}")


def _degree(f) -> int:
    d = f.degree if isinstance(f, MapDatum) else int(f)
    if d < 0:
        raise ValueError(f"map degree must be non-negative, got {d}")
    return d


def h0_h1(twist: int) -> Tuple[int, int]:
    """Dimensions of ``H^0`` and ``H^1`` of ``O(twist)`` on ``P^1``.

    >>> h0_h1(2), h0_h1(-3)
    ((3, 0), (0, 2))
    """
    return max(twist + 1, 0), max(-twist - 1, 0)


def h0(twist: int) -> int:
    return h0_h1(twist)[0]


def h1(twist: int) -> int:
    return h0_h1(twist)[1]


def cohomology(bundle: BundleSum) -> Tuple[int, int]:
    """``(h0, h1)`` of a split bundle on ``P^1``."""
    if bundle.base_dim != 1:
        raise ValueError("cohomology is only computed on P^1")
    return sum(h0(a) for a in bundle.twists), sum(h1(a) for a in bundle.twists)


def pullback(bundle: BundleSum, f) -> BundleSum:
    """Pull back along a degree-``d`` map ``P^1 -> P^m``."""
    d = _degree(f)
    return BundleSum(tuple(a * d for a in bundle.twists), 1)


def dualize(bundle: BundleSum) -> BundleSum:
    return BundleSum(tuple(-a for a in bundle.twists), bundle.base_dim)


def _fiber_bundle(X) -> BundleSum:
    return X.V if isinstance(X.V, BundleSum) else BundleSum(tuple(X.V), X.m)


def q_rank(X, f) -> int:
    """Rank of ``Q`` at an irreducible genus-0 fibre: ``h0(P^1, phi^* V^dual)``.

    ``X`` is a :class:`~supermaps.superscheme.SplitScheme`.
    """
    return cohomology(pullback(dualize(_fiber_bundle(X)), f))[0]


def euler_sequence_h1(m: int, d: int) -> int:
    """Upper bound for ``h1(P^1, phi^* T_{P^m})`` from the Euler sequence.

    ``0 -> O -> O(d)^(m+1) -> phi^* T -> 0`` on a curve gives a surjection
    ``H^1(O(d))^(m+1) -> H^1(phi^* T)``; the bound is exact whenever it is 0.
    """
    return (m + 1) * h1(d)


def convexity_check(X, f) -> Tuple[bool, bool]:
    """``(bosonic_ok, fermionic_ok)`` for genus-0 maps of degree ``d``.

    bosonic_ok: ``H^1(phi^* T_{P^m}) = 0``.  fermionic_ok: ``H^1(phi^* V^dual) = 0``.
    """
    d = _degree(f)
    bosonic_ok = euler_sequence_h1(X.m, d) == 0
    fermionic_ok = cohomology(pullback(dualize(_fiber_bundle(X)), d))[1] == 0
    return bosonic_ok, fermionic_ok


def is_convex(X, degrees: Iterable[int]) -> bool:
    return all(all(convexity_check(X, d)) for d in degrees)
