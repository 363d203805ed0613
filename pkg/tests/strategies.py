import random
from fractions import Fraction

from hypothesis import strategies as st

from supermaps.moduli.graphs import DualGraph
from supermaps.superring import RingSpec, SuperPolynomial

RING = RingSpec(("x", "y"), ("t1", "t2", "t3", "t4"))
EVEN_RING = RingSpec(("u", "w"), ())
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def monomials(draw, ring=RING, max_exp=2):
    exps = tuple(draw(st.integers(0, max_exp)) for _ in range(ring.m))
    mask = draw(st.integers(0, (1 << ring.n) - 1))
    return exps, mask


@st.composite
def polys(draw, ring=RING, max_terms=4):
    terms = draw(st.dictionaries(monomials(ring), coefficients, max_size=max_terms))
    return SuperPolynomial(ring, terms)


@st.composite
def homogeneous(draw, parity, ring=RING, max_terms=4):
    p = draw(polys(ring, max_terms))
    return p.parity_decompose()[parity]


def random_poly(rng: random.Random, ring=RING, terms=3, max_exp=2, parity=None):
    out = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, max_exp) for _ in range(ring.m))
        mask = rng.randrange(1 << ring.n)
        out[(exps, mask)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    p = SuperPolynomial(ring, out)
    return p if parity is None else p.parity_decompose()[parity]


def random_graph(rng, max_vertices=6, max_legs=5):
    k = rng.randint(1, max_vertices)
    edges = [(rng.randrange(v), v) for v in range(1, k)]
    for _ in range(rng.randint(0, 2)):
        edges.append((rng.randrange(k), rng.randrange(k)))
    vertices = [(rng.choice([0, 0, 0, 1, 2]), rng.choice([0, 0, 1, 2])) for _ in range(k)]
    n = rng.randint(0, max_legs)
    legs = [(i, rng.randrange(k)) for i in range(1, n + 1)]
    return DualGraph(vertices, edges, legs)
