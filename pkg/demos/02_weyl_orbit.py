"""Follow Lambda_2 along the reflection stream and compare with the printed quadratics."""

from d43demazure import demazure as dz
from d43demazure.cartan import LAMBDA, root_coefficients, wk_weights

mu = LAMBDA[2]
for k, w in enumerate(wk_weights(mu, 12)):
    print(f"k={k:2d}  w^(k)Lambda_2 = {w}  Lambda_2 - w = {root_coefficients(w, mu)}")

rep = dz.lemma_weyl_check(6)
print("\nbest convention:", rep.tables["best_convention"])
for name, verdict in rep.tables["verdicts"].items():
    print(f"  {name:10s} {verdict}")
