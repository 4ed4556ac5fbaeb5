"""Write the crystal graph of B^{1,1} as DOT and read it back."""

from d43demazure import perfect as pc
from d43demazure.crystal import export_dot, induced_graph, parse_dot

B = pc.PerfectCrystal(1)
text = export_dot(induced_graph(B.elements(), B), name="B1_1")
print(text)
name, g = parse_dot(text)
print(f"parsed {name}: {len(g.vertices)} vertices, {len(g.edges)} edges;",
      "round trip identical:", export_dot(g, name=name) == text)
