"""
Chern and Todd classes on projective space
==========================================

Classes live in Q[h]/(h^(m+1)).
"""

from supermaps.chern import chern_character, chern_exterior, integrate, kfc_demo, todd_tangent, total_chern
from supermaps.sheafcalc import BundleSum

# the Todd class of the tangent bundle integrates to 1
for m in range(1, 6):
    td = todd_tangent(m)
    print(f"m={m}: td = {td}   integral = {integrate(td)}")

# Riemann-Roch: chi(O(k)) on P^3
m = 3
print([str(integrate(chern_character(BundleSum((k,)), m) * todd_tangent(m))) for k in range(6)])

# exterior powers of V = O(1)^4 on P^4
V = BundleSum((1, 1, 1, 1))
for k in range(5):
    print(f"c(wedge^{k} V) =", chern_exterior(V, k, 4))
print("c(V) =", total_chern(V, 4))

# formal fundamental-class expression with V = O(-1)^4 over P^3
print("kfc =", kfc_demo(BundleSum((-1,) * 4), 3))
