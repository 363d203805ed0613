from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermaps.parsing import parse_poly
from supermaps.superring import (
    ParityError,
    RingMismatchError,
    RingSpec,
    SuperPolynomial,
    add,
    hom_apply,
    is_nilpotent_odd,
    merge_sign,
    mul,
    parity_decompose,
    tau_b,
    tensor,
    tensor_with_embeddings,
)

from .oracles import bubble_sign, grassmann_mul, to_lists
from .strategies import EVEN_RING, RING, homogeneous, polys

R = RingSpec(("x", "y"), ("t1", "t2"))


def P(text, ring=R):
    return parse_poly(text, ring)


class TestMul:
    def test_ordered_odd_product(self):
        t1, t2 = R.var("t1"), R.var("t2")
        assert mul(t1, t2) == P("t1*t2")
        assert mul(t1, t2).coefficient(((0, 0), 0b11)) == 1

    def test_transposition_sign(self):
        t1, t2 = R.var("t1"), R.var("t2")
        assert mul(t2, t1) == -P("t1*t2")

    def test_odd_square_vanishes(self):
        t1 = R.var("t1")
        assert mul(t1, t1).is_zero()

    def test_even_exponents_add(self):
        assert P("x^2*y") * P("x*t1") == P("x^3*y*t1")

    def test_ring_mismatch_names_both(self):
        other = RingSpec(("x",), ())
        with pytest.raises(RingMismatchError, match=r"Q\[x,y\|t1,t2\].*Q\[x\|\]"):
            R.var("x") * other.var("x")

    @pytest.mark.parametrize("a,b", [(0b001, 0b110), (0b100, 0b011), (0b101, 0b010), (0b110, 0b1)])
    def test_merge_sign_matches_bubble_sort(self, a, b):
        seq = [i for i in range(3) if a >> i & 1] + [i for i in range(3) if b >> i & 1]
        assert merge_sign(a, b) == bubble_sign(seq)[1]

    @settings(max_examples=200)
    @given(polys(), polys())
    def test_matches_sorting_oracle(self, p, q):
        assert to_lists(p * q) == grassmann_mul(to_lists(p), to_lists(q))


class TestAdd:
    def test_identity(self):
        assert add(R.var("x"), R.zero()) == R.var("x")

    def test_doubling(self):
        assert add(P("t1*t2"), P("t1*t2")) == P("2*t1*t2")

    def test_cancellation_leaves_no_zero_terms(self):
        s = add(P("x + t1"), P("-t1"))
        assert s == R.var("x")
        assert len(s) == 1

    def test_scalars(self):
        assert P("x") + 1 == P("x + 1")
        assert 2 * P("x") == P("2x")
        assert Fraction(1, 2) * P("t1") == P("1/2*t1")
        with pytest.raises(TypeError):
            P("x") * 0.5


class TestParity:
    def test_mixed(self):
        assert parity_decompose(P("x + t1")) == (P("x"), P("t1"))

    def test_two_odds_make_an_even(self):
        assert parity_decompose(P("t1*t2")) == (P("t1*t2"), R.zero())

    def test_zero(self):
        assert parity_decompose(R.zero()) == (R.zero(), R.zero())

    @given(polys())
    def test_reassembles(self, p):
        e, o = p.parity_decompose()
        assert e + o == p
        assert e.is_even() and o.is_odd()


class TestNilpotent:
    def test_generator(self):
        assert is_nilpotent_odd(R.var("t1"))

    def test_mixed_odd(self):
        assert is_nilpotent_odd(P("x*t1 + t2"))

    def test_even_input_rejected(self):
        with pytest.raises(ParityError):
            is_nilpotent_odd(R.var("x"))

    @given(homogeneous(1))
    def test_property(self, p):
        assert is_nilpotent_odd(p)


class TestTruncation:
    def test_kills_odd_products(self):
        assert tau_b(P("x + t1*t2")) == RingSpec(("x", "y")).var("x")

    def test_fixes_bosonic(self):
        assert str(tau_b(P("x^2*y"))) == "x^2*y"

    def test_kills_odd(self):
        assert tau_b(R.var("t1")).is_zero()
        assert tau_b(R.var("t1")).ring == R.bosonic()

    @given(polys(), polys())
    def test_algebra_map(self, p, q):
        assert tau_b(p * q) == tau_b(p) * tau_b(q)
        assert tau_b(p + q) == tau_b(p) + tau_b(q)
        assert tau_b(tau_b(p)) == tau_b(p)


class TestHom:
    def test_identity(self):
        images = {v: R.var(v) for v in R.generators}
        p = P("3*x^2*t1*t2 - y + 1/2*t2")
        assert hom_apply(images, p) == p

    def test_swap_odd_generators(self):
        T = RingSpec((), ("s1", "s2"))
        images = {"x": T.zero(), "y": T.zero(), "t1": T.var("s2"), "t2": T.var("s1")}
        assert hom_apply(images, P("t1*t2")) == -(T.var("s1") * T.var("s2"))

    def test_factorization_through_truncation(self):
        images = {"x": EVEN_RING.var("u") + 2, "y": EVEN_RING.var("w"), "t1": EVEN_RING.zero(), "t2": EVEN_RING.zero()}
        p = P("x + t1")
        assert hom_apply(images, p) == EVEN_RING.var("u") + 2
        assert hom_apply(images, p) == hom_apply(images, tau_b(p))

    def test_parity_violation_names_generator(self):
        images = {"x": R.var("t1"), "y": R.var("y"), "t1": R.var("t1"), "t2": R.var("t2")}
        with pytest.raises(ParityError, match="'x'"):
            hom_apply(images, R.var("x"))

    def test_missing_image(self):
        with pytest.raises(KeyError):
            hom_apply({"x": R.var("x")}, R.var("y"))

    @settings(max_examples=50)
    @given(polys(), polys(), homogeneous(0), homogeneous(0), homogeneous(1), homogeneous(1), homogeneous(1), homogeneous(1))
    def test_composition_and_multiplicativity(self, p, q, e1, e2, o1, o2, o3, o4):
        f = dict(zip(RING.generators, (e1, e2, o1, o2, o3, o4)))
        ident = {v: RING.var(v) for v in RING.generators}
        g = {v: hom_apply(f, RING.var(v)) for v in RING.generators}
        assert hom_apply(f, p * q) == hom_apply(f, p) * hom_apply(f, q)
        assert hom_apply(ident, p) == p
        # g = f o id; composing with f again equals applying (f o f)
        ff = {v: hom_apply(f, f[v]) for v in RING.generators}
        assert hom_apply(f, hom_apply(g, p)) == hom_apply(ff, p)


class TestTensor:
    def test_concatenates(self):
        A = RingSpec(("x",), ("a",))
        B = RingSpec(("y",), ("b",))
        assert tensor(A, B) == RingSpec(("x", "y"), ("a", "b"))

    def test_even_with_odd(self):
        assert tensor(RingSpec(("x",), ()), RingSpec((), ("b",))) == RingSpec(("x",), ("b",))

    def test_truncation_commutes(self):
        A = RingSpec(("x",), ("a",))
        B = RingSpec(("y",), ("b",))
        assert tensor(A, B).bosonic() == tensor(A.bosonic(), B.bosonic())

    def test_renames_clashes_by_ordinal(self):
        A = RingSpec(("x",), ("t1",))
        B = RingSpec(("x", "z"), ("t1",))
        ring, left, right = tensor_with_embeddings(A, B)
        assert ring == RingSpec(("x_1", "x_2", "z"), ("t1_1", "t1_2"))
        assert left["x"] == ring.var("x_1") and right["t1"] == ring.var("t1_2")

    def test_embeddings_are_homs(self):
        A = RingSpec(("x",), ("a",))
        B = RingSpec(("y",), ("b",))
        ring, left, right = tensor_with_embeddings(A, B)
        pa = parse_poly("x*a + 2", A)
        pb = parse_poly("y - b", B)
        prod = hom_apply(left, pa) * hom_apply(right, pb)
        assert prod == parse_poly("x*y*a - x*a*b + 2*y - 2*b", ring)


def test_rings_validate():
    with pytest.raises(ValueError):
        RingSpec(("x", "x"), ())
    with pytest.raises(ValueError):
        RingSpec((), tuple(f"t{i}" for i in range(65)))
    with pytest.raises(ValueError):
        SuperPolynomial(R, {((1,), 0): 1})


@given(st.lists(polys(), min_size=3, max_size=3))
def test_ring_laws(ps):
    p, q, r = ps
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
