"""Demazure crystals in the path model versus the product sets P^(k)."""

from d43demazure import demazure as dz
from d43demazure.paths import demazure_paths, ground_state, path_f

p = ground_state(1)
print("ground state:", p)
for i in (2, 1, 2):
    p = path_f(i, p)
    print(f"  f_{i} ->", p)

print("\n|B_w(k)| for k = 0..9:", [len(demazure_paths(k, 1)) for k in range(10)])

rep = dz.verify_theorem(1, 12)
print("\nk  demazure  P^(k)  edges  graphs equal")
for r in rep.tables["rows"]:
    print(f"{r['k']:2d} {r['demazure']:9d} {r['pk']:6d} {r['edges']:6d}  {r['graphs_equal']}")
print("path model = product sets:", rep.status)
