"""Free graded-commutative polynomial rings ``Q[x1..xm | t1..tn]``.

Even variables commute, odd variables anticommute and square to zero.  A
monomial is stored as ``(exponents, odd_mask)``: a tuple of even exponents and
a bitmask of the odd variables that occur.  The odd factors of a monomial are
always read in ascending index order; any reordering sign is absorbed into the
coefficient, which makes the term dictionary a canonical form.

Coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

log = logging.getLogger(__name__)

MAX_ODD = 64

Monomial = Tuple[Tuple[int, ...], int]


class RingMismatchError(ValueError):
    """Raised when two operands live in different rings."""


class ParityError(ValueError):
    """Raised when an element does not have the parity an operation needs."""


@dataclass(frozen=True)
class RingSpec:
    """Ordered even and odd generator names.

    The order of ``odd_vars`` fixes the sign convention.
    """

    even_vars: Tuple[str, ...] = ()
    odd_vars: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "even_vars", tuple(self.even_vars))
        object.__setattr__(self, "odd_vars", tuple(self.odd_vars))
        names = self.even_vars + self.odd_vars
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        if len(self.odd_vars) > MAX_ODD:
            raise ValueError(f"at most {MAX_ODD} odd variables are supported")

    @property
    def m(self) -> int:
        return len(self.even_vars)

    @property
    def n(self) -> int:
        return len(self.odd_vars)

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.even_vars + self.odd_vars

    def is_bosonic(self) -> bool:
        return not self.odd_vars

    def bosonic(self) -> "RingSpec":
        """The ring with the odd variables dropped."""
        return RingSpec(self.even_vars, ())

    def __str__(self):
        return "Q[{}|{}]".format(",".join(self.even_vars), ",".join(self.odd_vars))

    # element constructors

    def zero(self) -> "SuperPolynomial":
        return SuperPolynomial(self, {})

    def one(self) -> "SuperPolynomial":
        return self.const(1)

    def const(self, c) -> "SuperPolynomial":
        return SuperPolynomial(self, {((0,) * self.m, 0): c})

    def var(self, name: str) -> "SuperPolynomial":
        if name in self.even_vars:
            exps = [0] * self.m
            exps[self.even_vars.index(name)] = 1
            return SuperPolynomial(self, {(tuple(exps), 0): 1})
        if name in self.odd_vars:
            return SuperPolynomial(self, {((0,) * self.m, 1 << self.odd_vars.index(name)): 1})
        raise KeyError(f"{name!r} is not a generator of {self}")

    def gens(self) -> Tuple["SuperPolynomial", ...]:
        return tuple(self.var(v) for v in self.generators)


def odd_indices(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def monomial_degree(mono: Monomial) -> int:
    """Total degree; each odd variable counts 1."""
    return sum(mono[0]) + bin(mono[1]).count("1")


def merge_sign(a: int, b: int) -> int:
    """Koszul sign of sorting the concatenation ``a . b`` of two disjoint odd sets."""
    inversions = 0
    while b:
        low = b & -b
        # odd factors of ``a`` with larger index must move past this one
        inversions += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if inversions & 1 else 1


def grlex_key(mono: Monomial, n_odd: int):
    """Graded lex key, even variables before odd ones; larger key = larger monomial."""
    exps, mask = mono
    odd_vec = tuple((mask >> i) & 1 for i in range(n_odd))
    return (monomial_degree(mono), exps + odd_vec)


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class SuperPolynomial:
    """An immutable element of a free super-polynomial ring."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, object]):
        self.ring = ring
        clean: Dict[Monomial, Fraction] = {}
        for (exps, mask), c in terms.items():
            if len(exps) != ring.m or mask >> ring.n:
                raise ValueError(f"monomial {(exps, mask)} does not belong to {ring}")
            c = _coerce(c)
            if c:
                clean[(tuple(exps), mask)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self):
        """Terms in decreasing graded-lex order."""
        n = self.ring.n
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0], n), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree, ``-1`` for the zero polynomial."""
        return max((monomial_degree(m) for m in self._terms), default=-1)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    # parity

    def parity_decompose(self) -> Tuple["SuperPolynomial", "SuperPolynomial"]:
        even, odd = {}, {}
        for mono, c in self._terms.items():
            (odd if bin(mono[1]).count("1") & 1 else even)[mono] = c
        return SuperPolynomial._raw(self.ring, even), SuperPolynomial._raw(self.ring, odd)

    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous elements, ``None`` for mixed ones (zero is even)."""
        parities = {bin(m[1]).count("1") & 1 for m in self._terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def is_homogeneous(self) -> bool:
        return self.parity() is not None

    def is_even(self) -> bool:
        return self.parity() == 0

    def is_odd(self) -> bool:
        return not self._terms or self.parity() == 1

    # arithmetic

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, SuperPolynomial):
            self._check(other)
            return other
        try:
            return self.ring.const(_coerce(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return SuperPolynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for (ea, ma), ca in self._terms.items():
            for (eb, mb), cb in other._terms.items():
                if ma & mb:
                    continue
                mono = (tuple(x + y for x, y in zip(ea, eb)), ma | mb)
                c = ca * cb if merge_sign(ma, mb) > 0 else -(ca * cb)
                s = out.get(mono, 0) + c
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return SuperPolynomial._raw(self.ring, out)

    def __rmul__(self, other):
        # scalars are central
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SuperPolynomial):
            return self.ring == other.ring and self._terms == other._terms
        try:
            return self == self.ring.const(_coerce(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"SuperPolynomial({str(self)!r}, ring={self.ring})"


def mul(p: SuperPolynomial, q: SuperPolynomial) -> SuperPolynomial:
    return p * q


def add(p: SuperPolynomial, q: SuperPolynomial) -> SuperPolynomial:
    return p + q


def parity_decompose(p: SuperPolynomial):
    return p.parity_decompose()


def is_nilpotent_odd(p: SuperPolynomial) -> bool:
    """Check ``p * p == 0`` for a homogeneous odd ``p``.

    This always holds; it is kept as an executable statement of the fact that
    odd elements square to zero.
    """
    if not p.is_odd():
        raise ParityError(f"expected a homogeneous odd element, got {p}")
    return (p * p).is_zero()


def tau_b(p: SuperPolynomial) -> SuperPolynomial:
    """Bosonic truncation: the image of ``p`` in ``R / (R * R_odd)``.

    The result lives in the ring with the odd variables removed.

    >>> from supermaps.parsing import parse_poly
    >>> print(tau_b(parse_poly("x^2 + x*t1*t2 - 1")))
    x^2 - 1
    """
    ring = p.ring.bosonic()
    return SuperPolynomial._raw(ring, {(e, 0): c for (e, mask), c in p.items() if not mask})


def hom_apply(images: Mapping[str, SuperPolynomial], p: SuperPolynomial) -> SuperPolynomial:
    """Apply the algebra map sending each generator of ``p.ring`` to ``images[name]``.

    ``images`` may contain names that are not generators of ``p.ring``; they
    are ignored, so the same images can be applied to ``tau_b(p)``.
    """
    ring = p.ring
    target = None
    for name in ring.generators:
        if name not in images:
            raise KeyError(f"no image given for generator {name!r}")
        img = images[name]
        if target is None:
            target = img.ring
        elif img.ring != target:
            raise RingMismatchError(f"images of generators live in different rings: {target} vs {img.ring}")
    for name in ring.even_vars:
        if not images[name].is_even():
            raise ParityError(f"even generator {name!r} must map to an even element, got {images[name]}")
    for name in ring.odd_vars:
        if not images[name].is_odd():
            raise ParityError(f"odd generator {name!r} must map to an odd element, got {images[name]}")
    if target is None:
        # the ground field has no generators; nothing to map into but itself
        target = ring

    even_imgs = [images[v] for v in ring.even_vars]
    odd_imgs = [images[v] for v in ring.odd_vars]
    powers: Dict[Tuple[int, int], SuperPolynomial] = {}

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = even_imgs[i] ** k
        return powers[(i, k)]

    result = target.zero()
    for (exps, mask), c in p.items():
        term = target.const(c)
        for i, k in enumerate(exps):
            if k:
                term = term * power(i, k)
        for j in odd_indices(mask):
            term = term * odd_imgs[j]
        result = result + term
    return result


def _rename(names: Iterable[str], clash: set, ordinal: int) -> Tuple[Tuple[str, ...], Dict[str, str]]:
    out, renames = [], {}
    for v in names:
        if v in clash:
            renames[v] = f"{v}_{ordinal}"
            out.append(renames[v])
        else:
            out.append(v)
    return tuple(out), renames


def tensor_with_embeddings(a: RingSpec, b: RingSpec):
    """``a (x) b`` together with the two inclusion maps.

    Returns ``(ring, left, right)`` where ``left``/``right`` map the generator
    names of ``a``/``b`` to their images in ``ring``.  Clashing names are
    suffixed with ``_1`` (from ``a``) or ``_2`` (from ``b``).
    """
    clash = set(a.generators) & set(b.generators)
    ae, ra = _rename(a.even_vars, clash, 1)
    ao, ra2 = _rename(a.odd_vars, clash, 1)
    be, rb = _rename(b.even_vars, clash, 2)
    bo, rb2 = _rename(b.odd_vars, clash, 2)
    ra.update(ra2)
    rb.update(rb2)
    if clash:
        log.info("tensor renamed clashing generators: %s | %s", ra, rb)
    ring = RingSpec(ae + be, ao + bo)
    fresh = set(ring.generators)
    if len(fresh) != len(ring.generators):
        raise ValueError(f"renaming produced a clash in {ring}")
    left = {v: ring.var(ra.get(v, v)) for v in a.generators}
    right = {v: ring.var(rb.get(v, v)) for v in b.generators}
    return ring, left, right


def tensor(a: RingSpec, b: RingSpec) -> RingSpec:
    return tensor_with_embeddings(a, b)[0]
