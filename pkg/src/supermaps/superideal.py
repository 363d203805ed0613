"""Z2-homogeneous ideals and degree-truncated membership.

Membership is decided by exact linear algebra: the degree-``D`` part of an
ideal is spanned by the products ``m * g`` (``m`` a monomial, ``g`` a
homogeneous generator) of degree at most ``D``.  A positive answer comes with
an explicit certificate; a negative answer only holds up to ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .superring import Monomial, RingSpec, SuperPolynomial, grlex_key, tau_b


class DegreeBoundError(ValueError):
    """The truncation bound is too small for the input."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


def monomials_up_to(ring: RingSpec, degree: int) -> List[Monomial]:
    """All monomials of total degree ``<= degree``, in increasing graded-lex order."""
    out = []
    for k in range(min(degree, ring.n) + 1):
        for odd in combinations(range(ring.n), k):
            mask = sum(1 << j for j in odd)
            for exps in _compositions_up_to(ring.m, degree - k):
                out.append((exps, mask))
    out.sort(key=lambda mono: grlex_key(mono, ring.n))
    return out


def _compositions_up_to(m: int, total: int):
    if m == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_up_to(m - 1, total - first):
            yield (first,) + rest


def monomial_poly(ring: RingSpec, mono: Monomial) -> SuperPolynomial:
    return SuperPolynomial(ring, {mono: 1})


class SuperIdeal:
    """Ideal generated by the homogeneous parts of the given polynomials.

    Each generator is split into its even and odd part and both parts are
    used, so the ideal is a super-ideal by construction.
    """

    def __init__(self, ring: RingSpec, generators: Sequence[SuperPolynomial]):
        for g in generators:
            if g.ring != ring:
                raise ValueError(f"generator {g} lives in {g.ring}, not {ring}")
        self.ring = ring
        self.generators = tuple(generators)
        parts = []
        for g in self.generators:
            for part in g.parity_decompose():
                if not part.is_zero() and part not in parts:
                    parts.append(part)
        self.homogeneous_generators: Tuple[SuperPolynomial, ...] = tuple(parts)

    def max_degree(self) -> int:
        return max((g.degree() for g in self.homogeneous_generators), default=0)

    def __repr__(self):
        return f"SuperIdeal({self})"

    def __str__(self):
        if not self.homogeneous_generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.homogeneous_generators) + ")"


@dataclass
class Membership:
    """Outcome of a truncated membership test.

    ``certificate`` lists ``(cofactor, generator)`` pairs with
    ``sum(cofactor * generator) == p``.  When ``member`` is false the answer
    is only known to hold for the degree-``bound`` truncation.
    """

    member: bool
    bound: int
    certificate: List[Tuple[SuperPolynomial, SuperPolynomial]] = field(default_factory=list)

    def __bool__(self):
        return self.member


def _check_bound(p: SuperPolynomial, ideal: SuperIdeal, bound: int) -> None:
    if bound < 1:
        raise DegreeBoundError(f"degree bound must be positive, got {bound}", 1)
    need = max(p.degree(), ideal.max_degree(), 1)
    if need > bound:
        raise DegreeBoundError(f"degree bound {bound} is below the required {need}", need)


class _Echelon:
    """Reduced row echelon form over the monomial basis, pivots at leading monomials.

    Each row remembers which products ``m * g`` it came from.
    """

    def __init__(self, ring: RingSpec):
        self.ring = ring
        self.rows: Dict[Monomial, Tuple[Dict[Monomial, Fraction], Dict[Tuple[Monomial, int], Fraction]]] = {}
        self._key = lambda mono: grlex_key(mono, ring.n)

    def _lead(self, vec):
        return max(vec, key=self._key)

    def reduce(self, vec, combo):
        """Fully reduce ``vec`` (destructively) and return the remainder and its combination."""
        vec = dict(vec)
        combo = dict(combo)
        while True:
            hits = [m for m in vec if m in self.rows]
            if not hits:
                return vec, combo
            piv = max(hits, key=self._key)
            factor = vec[piv]
            row, rcombo = self.rows[piv]
            for mono, c in row.items():
                s = vec.get(mono, 0) - factor * c
                if s:
                    vec[mono] = s
                else:
                    vec.pop(mono, None)
            for key, c in rcombo.items():
                s = combo.get(key, 0) - factor * c
                if s:
                    combo[key] = s
                else:
                    combo.pop(key, None)

    def insert(self, vec, combo) -> bool:
        vec, combo = self.reduce(vec, combo)
        if not vec:
            return False
        lead = self._lead(vec)
        inv = 1 / vec[lead]
        vec = {m: c * inv for m, c in vec.items()}
        combo = {k: c * inv for k, c in combo.items()}
        # keep the form reduced: clear the new pivot from existing rows
        for piv, (row, rcombo) in self.rows.items():
            factor = row.get(lead)
            if factor:
                for mono, c in vec.items():
                    s = row.get(mono, 0) - factor * c
                    if s:
                        row[mono] = s
                    else:
                        row.pop(mono, None)
                for key, c in combo.items():
                    s = rcombo.get(key, 0) - factor * c
                    if s:
                        rcombo[key] = s
                    else:
                        rcombo.pop(key, None)
        self.rows[lead] = (vec, combo)
        return True


def _truncated_echelon(ideal: SuperIdeal, bound: int) -> _Echelon:
    ring = ideal.ring
    ech = _Echelon(ring)
    basis = monomials_up_to(ring, bound)
    for gi, g in enumerate(ideal.homogeneous_generators):
        for mono in basis:
            prod = monomial_poly(ring, mono) * g
            if prod.is_zero() or prod.degree() > bound:
                continue
            ech.insert(dict(prod.items()), {(mono, gi): Fraction(1)})
    return ech


def _certificate(ideal, combo) -> List[Tuple[SuperPolynomial, SuperPolynomial]]:
    ring = ideal.ring
    cofactors: Dict[int, SuperPolynomial] = {}
    for (mono, gi), c in sorted(combo.items(), key=lambda kv: (kv[0][1], grlex_key(kv[0][0], ring.n))):
        term = SuperPolynomial(ring, {mono: c})
        cofactors[gi] = cofactors[gi] + term if gi in cofactors else term
    return [(cofactors[gi], ideal.homogeneous_generators[gi]) for gi in sorted(cofactors)]


def membership(p: SuperPolynomial, ideal: SuperIdeal, bound: int) -> Membership:
    """Decide whether ``p`` lies in the degree-``bound`` truncation of ``ideal``."""
    if p.ring != ideal.ring:
        raise ValueError(f"ring mismatch: {p.ring} vs {ideal.ring}")
    _check_bound(p, ideal, bound)
    ech = _truncated_echelon(ideal, bound)
    rem, combo = ech.reduce(dict(p.items()), {})
    if rem:
        return Membership(False, bound)
    # reduce(p) = p - sum(combo) = 0, so p = -sum(combo)
    return Membership(True, bound, _certificate(ideal, {k: -c for k, c in combo.items()}))


def normal_form(p: SuperPolynomial, ideal: SuperIdeal, bound: int) -> SuperPolynomial:
    """Representative of ``p`` free of pivot monomials of the truncated ideal."""
    if p.ring != ideal.ring:
        raise ValueError(f"ring mismatch: {p.ring} vs {ideal.ring}")
    _check_bound(p, ideal, bound)
    rem, _ = _truncated_echelon(ideal, bound).reduce(dict(p.items()), {})
    return SuperPolynomial(ideal.ring, rem)


def z2_split(ideal: SuperIdeal) -> Tuple[List[SuperPolynomial], List[SuperPolynomial]]:
    """Even and odd parts of the generators; each part is checked to lie in the ideal."""
    even, odd = [], []
    bound = max(ideal.max_degree(), 1)
    for g in ideal.generators:
        e, o = g.parity_decompose()
        for part, bucket in ((e, even), (o, odd)):
            if part.is_zero() or part in bucket:
                continue
            assert membership(part, ideal, bound), f"{part} should lie in {ideal}"
            bucket.append(part)
    return even, odd


def spec_reduce(ideal: SuperIdeal) -> SuperIdeal:
    """Bosonic ideal ``tau_b(I + (odd variables))`` in the even subring.

    Every prime super-ideal contains all odd elements, so this presents the
    same set of primes as ``I`` on the bosonic side.
    """
    target = ideal.ring.bosonic()
    gens = []
    for g in ideal.homogeneous_generators:
        b = tau_b(g)
        if not b.is_zero() and b not in gens:
            gens.append(b)
    return SuperIdeal(target, gens)
