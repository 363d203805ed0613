import random

import pytest

from supermaps.parsing import parse_many, parse_poly
from supermaps.superideal import (
    DegreeBoundError,
    SuperIdeal,
    membership,
    monomials_up_to,
    normal_form,
    spec_reduce,
    z2_split,
)
from supermaps.superring import RingSpec

from .oracles import all_monomials, dense_membership
from .strategies import random_poly

R = RingSpec(("x",), ("t1", "t2"))


def I(*texts, ring=R):
    return SuperIdeal(ring, parse_many(texts, ring))


def P(text, ring=R):
    return parse_poly(text, ring)


def test_basis_enumeration_matches_oracle():
    ring = RingSpec(("x", "y", "z"), ("t1", "t2", "t3", "t4"))
    assert len(monomials_up_to(ring, 4)) == len(all_monomials(3, 4, 4))


class TestMembership:
    def test_odd_multiple(self):
        res = membership(P("t1*t2"), I("t1"), 4)
        assert res and res.bound == 4

    def test_even_variable_not_in_odd_ideal(self):
        res = membership(P("x"), I("t1", "t2"), 4)
        assert not res
        assert res.bound == 4 and res.certificate == []

    def test_certificate_reconstructs(self):
        ideal = I("x^2 - t1*t2", "x*t1")
        p = P("x^3 + 2*x*t1*t2 - x^2*t1")
        res = membership(p, ideal, 4)
        assert res
        total = sum((cof * g for cof, g in res.certificate), R.zero())
        assert total == p

    def test_degree_overflow_reports_bound(self):
        with pytest.raises(DegreeBoundError) as info:
            membership(P("x^5"), I("x"), 4)
        assert info.value.required == 5
        with pytest.raises(DegreeBoundError):
            membership(P("x"), I("x^3"), 2)

    def test_monotone_in_degree(self):
        ideal = I("x^2 + t1*t2")
        for p in [P("x^3 + x*t1*t2"), P("x^2*t1"), P("x")]:
            results = [bool(membership(p, ideal, D)) for D in range(3, 7)]
            assert results == sorted(results)

    def test_agrees_with_dense_oracle(self):
        rng = random.Random(11)
        count = 0
        while count < 25:
            m, n = rng.randint(0, 2), rng.randint(1, 3)
            ring = RingSpec(tuple(f"x{i}" for i in range(m)), tuple(f"t{i}" for i in range(n)))
            gens = [random_poly(rng, ring, terms=rng.randint(1, 2), max_exp=1) for _ in range(rng.randint(1, 2))]
            ideal = SuperIdeal(ring, gens)
            if not ideal.homogeneous_generators:
                continue
            # mix in a known member about half the time
            p = random_poly(rng, ring, terms=2, max_exp=1)
            if rng.random() < 0.5:
                p = p * gens[0] + random_poly(rng, ring, terms=1, max_exp=1) * gens[-1]
            if p.degree() > 3 or ideal.max_degree() > 3:
                continue
            assert bool(membership(p, ideal, 3)) == dense_membership(p, gens, 3)
            count += 1


class TestNormalForm:
    def test_drops_ideal_part(self):
        assert normal_form(P("t1*t2 + x"), I("t1"), 4) == P("x")

    @pytest.mark.parametrize("g", ["x^2 - t1*t2", "x*t1 + t2", "t1", "x^3"])
    def test_generator_reduces_to_zero(self, g):
        assert normal_form(P(g), I(g), 4).is_zero()

    def test_fixed_representative(self):
        ideal = I("x^2 - t1*t2")
        nf = normal_form(P("x^2"), ideal, 4)
        # even-before-odd grlex makes x^2 the pivot
        assert nf == P("t1*t2")
        assert membership(P("x^2") - nf, ideal, 4)

    def test_zero_iff_member_and_idempotent(self):
        rng = random.Random(5)
        ideal = I("x*t1 - t2", "x^2")
        for _ in range(30):
            p = random_poly(rng, R, terms=3, max_exp=2)
            if p.degree() > 4:
                continue
            nf = normal_form(p, ideal, 4)
            assert nf.is_zero() == bool(membership(p, ideal, 4))
            assert normal_form(nf, ideal, 4) == nf
            assert membership(p - nf, ideal, 4)


class TestSplit:
    def test_mixed_generator(self):
        assert z2_split(I("x + t1")) == ([P("x")], [P("t1")])

    def test_even_odd_product(self):
        assert z2_split(I("t1*t2")) == ([P("t1*t2")], [])

    def test_zero_ideal(self):
        assert z2_split(I("0")) == ([], [])

    def test_homogeneous_parts_are_generators(self):
        ideal = I("x + t1")
        assert membership(P("x"), ideal, 2) and membership(P("t1"), ideal, 2)


class TestSpecReduce:
    B = RingSpec(("x",), ())

    def test_point(self):
        red = spec_reduce(I("x - 1", "t1"))
        assert red.generators == (parse_poly("x - 1", self.B),)

    def test_odd_ideal_is_zero(self):
        red = spec_reduce(I("t1"))
        assert red.generators == () and str(red) == "(0)"

    def test_nilpotent_part_dropped(self):
        red = spec_reduce(I("x^2 - t1*t2"))
        assert red.generators == (parse_poly("x^2", self.B),)
        assert membership(parse_poly("x^2", self.B), red, 2)

    def test_idempotent(self):
        for ideal in [I("x - 1", "t1"), I("x^2 - t1*t2", "x*t1 + t2"), I("t1*t2")]:
            once = spec_reduce(ideal)
            assert spec_reduce(once).generators == once.generators

    def test_odd_variables_in_enlarged_ideal(self):
        ideal = I("x^2 - t1*t2")
        enlarged = SuperIdeal(R, list(ideal.generators) + list(R.gens()[R.m :]))
        for t in R.odd_vars:
            assert membership(R.var(t), enlarged, 3)
