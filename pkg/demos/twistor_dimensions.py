"""
Expected dimensions for maps into projective superspace
=======================================================

For P(3|4) the virtual super-dimension does not depend on the degree.
"""

from supermaps import ModuliProblem, projective_superspace, q_rank, vsdim, witten_count
from supermaps.sheafcalc import convexity_check
from supermaps.superscheme import canonical_degree, is_super_calabi_yau

X = projective_superspace(3, 4)
print("canonical degree of", X, "=", canonical_degree(X), "| super Calabi-Yau:", is_super_calabi_yau(X))

# dimension bookkeeping degree by degree
print(" d | vsdim | chart (even|odd) | rank Q | convex")
for d in range(1, 7):
    bos, ferm = witten_count(3, 4, d)
    print(
        f"{d:2d} | {vsdim(ModuliProblem(0, 0, X, d)):5d} | {bos:6d} | {ferm:<5d} | {q_rank(X, d):6d} | {all(convexity_check(X, d))}"
    )

# the same table for a target that is not Calabi-Yau
Y = projective_superspace(2, 1)
print([vsdim(ModuliProblem(0, 0, Y, d)) for d in range(1, 7)])
