"""Walk through the crystal B^{1,3}: size, a few operator moves, perfectness."""

from d43demazure import perfect as pc

L = 3
B = pc.PerfectCrystal(L)
print(f"B^(1,{L}) has {len(B.elements())} elements")

# the ground element is fixed by the ground-state recursion
b = pc.ground_element(1)
print("ground element", b, "eps", pc.eps_vector(b, L), "phi", pc.phi_vector(b, L))

# follow the first block of the reflection stream as far as it goes
for i in (2, 1, 2, 1, 0, 1):
    b = pc.f_max(i, b, L)
    print(f"  f_{i}^max ->", b)

rep = pc.perfect_axioms(L)
print("perfect at level", L, ":", rep.status)
print("lambda_0 =", rep.tables["lambda0"])
print("dominant level-3 weights:", rep.tables["dominant_weights"])
