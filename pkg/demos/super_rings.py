"""
Arithmetic in a super polynomial ring
=====================================

Even variables commute, odd ones anticommute, and truncation throws away
anything with an odd factor.
"""

from supermaps import SuperIdeal, membership, normal_form, parse_poly, tau_b
from supermaps.superring import RingSpec

R = RingSpec(("x", "y"), ("t1", "t2"))

# odd variables anticommute, so swapping them costs a sign
a = parse_poly("t1*t2", R)
b = parse_poly("t2*t1", R)
print("t1*t2 + t2*t1 =", a + b)

# an odd element squares to zero even when it has several terms
psi = parse_poly("x*t1 + 3*t2", R)
print("psi^2 =", psi * psi)

# bosonic truncation keeps only the purely even part
p = parse_poly("(x + t1*t2)^3 - y*t1", R)
print("p =", p)
print("tau_b(p) =", tau_b(p))

# membership and normal forms up to degree 4, with a certificate
I = SuperIdeal(R, [parse_poly("x^2 - t1*t2", R), parse_poly("x*t1", R)])
q = parse_poly("x^3", R)
res = membership(q, I, 4)
print("x^3 in I:", res.member)
for cofactor, gen in res.certificate:
    print("   ", f"({cofactor}) * ({gen})")
print("normal form of x^2 + y:", normal_form(parse_poly("x^2 + y", R), I, 4))
