"""Split projective super-schemes ``Spec_{P^m}(wedge^* V)`` with ``V`` a sum of line bundles.

The canonical degree on the line class is taken to be
``-(m + 1) - sum(a_i)``: the canonical degree of ``P^m`` twisted by
``det V^dual``.  For ``P^{p|q}`` this is ``q - p - 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from .sheafcalc import BundleSum


class TargetSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class SplitScheme:
    m: int
    V: BundleSum

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"base dimension must be non-negative, got {self.m}")
        V = self.V if isinstance(self.V, BundleSum) else BundleSum(tuple(self.V), self.m)
        object.__setattr__(self, "V", BundleSum(V.twists, self.m))

    @property
    def rank(self) -> int:
        return self.V.rank

    @property
    def twists(self) -> Tuple[int, ...]:
        return self.V.twists

    def is_projective_superspace(self) -> bool:
        return all(a == -1 for a in self.V.twists)

    def __str__(self):
        if self.is_projective_superspace():
            return f"P({self.m}|{self.rank})"
        return f"split m={self.m} V={','.join(str(a) for a in self.V.twists)}"


def split_scheme(m: int, twists: Sequence[int] = ()) -> SplitScheme:
    return SplitScheme(m, BundleSum(tuple(twists), m))


def projective_superspace(p: int, q: int) -> SplitScheme:
    """``P^{p|q}``: base ``P^p`` with ``V = O(-1)^q``."""
    if p < 0 or q < 0:
        raise ValueError(f"P({p}|{q}) needs p, q >= 0")
    return split_scheme(p, (-1,) * q)


def sdim(X: SplitScheme) -> int:
    return X.m - X.rank


def tau_b(X: SplitScheme) -> SplitScheme:
    """Bosonic truncation: the base ``P^m`` with ``V`` forgotten."""
    return split_scheme(X.m)


def structure_sheaf_terms(X: SplitScheme) -> List[Tuple[int, BundleSum]]:
    """Twists of ``wedge^k V`` for ``k = 0..rank``."""
    roots = X.V.twists
    return [
        (k, BundleSum(tuple(sum(s) for s in combinations(roots, k)), X.m))
        for k in range(len(roots) + 1)
    ]


def canonical_degree(X: SplitScheme) -> int:
    return -(X.m + 1) - sum(X.V.twists)


def is_super_calabi_yau(X: SplitScheme) -> bool:
    return canonical_degree(X) == 0


def hypersurface_cy(p: int, q: int, s: int) -> bool:
    """Calabi-Yau test for a degree-``s`` hypersurface in ``P^{p|q}``."""
    if s < 1:
        raise ValueError(f"hypersurface degree must be at least 1, got {s}")
    return p + 1 - q == s


def ffp_check(X: SplitScheme) -> bool:
    """Odd part is coherent over the base; holds for every finite-rank ``V``."""
    return isinstance(X, SplitScheme)


_P_RE = re.compile(r"\s*P\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*\Z")
_SPLIT_RE = re.compile(r"\s*split\s+m=(\d+)\s+V=([-+0-9,\s]*)\Z")


def parse_target(text: str) -> SplitScheme:
    """Parse ``P(p|q)`` or ``split m=<m> V=<a1,a2,...>``."""
    m = _P_RE.match(text)
    if m:
        return projective_superspace(int(m.group(1)), int(m.group(2)))
    m = _SPLIT_RE.match(text)
    if m:
        body = m.group(2).replace(" ", "")
        try:
            twists = tuple(int(a) for a in body.split(",")) if body else ()
        except ValueError:
            raise TargetSyntaxError(f"bad twist list {body!r} in target {text!r}") from None
        return split_scheme(int(m.group(1)), twists)
    raise TargetSyntaxError(f"target must be 'P(p|q)' or 'split m=<m> V=<a1,...>', got {text!r}")
