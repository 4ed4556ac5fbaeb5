"""The nested subsets B_0 < ... < B_6 of B^{1,3l} and the explicit lists describing them."""

from d43demazure import demazure as dz

for l in (1, 2):
    sizes = [len(dz.ba_j(a, l)) for a in range(7)]
    print(f"l={l}: |B_a| =", sizes)
    print("  chain:", " ".join(str(b) for b in dz.chain(l)))

literal = dz.predicate_check(1)
amended = dz.predicate_check(1, amended=True)
print("\nliteral lists:", literal.status, f"({len(literal.violations)} extra elements at a=5)")
for v in literal.violations[:4]:
    print("  ", v["element"], "from", v["from"])
print("with xb1 = 0 added to each D_n:", amended.status)
