"""Disk diagrams as rotation systems, and the local feature detectors.

The 2x2 commutator grid (each square a pentagon enclosing a c-monogon)
shows the difference between the three cutcell definitions: its pentagons
disconnect a monogon when removed (definition 1) but each meets the
boundary in a single arc (so never definitions 2 or 3).
"""

from vankampen.diagram import (
    boundary_path,
    find_cutcells,
    find_shells,
    find_spurs,
    is_reduced,
    is_topological_disk,
    validate,
)
from vankampen.gallery import complex_for, figure_diagram

d = figure_diagram(1, 2)
x = complex_for("thm2")
print("figure 1 grid:", d)
print("valid:", validate(d, x).ok, "| reduced:", is_reduced(d),
      "| topological disk:", is_topological_disk(d))
print("boundary word:", boundary_path(d).word.text())
print("spurs:", len(find_spurs(d)), "shells:", len(find_shells(d)))
for defn in (1, 2, 3):
    faces = [w.face for w in find_cutcells(d, defn)]
    print(f"cutcells (definition {defn}):", faces)

print()
d3 = figure_diagram(3, 2)
print("figure 3 grid:", d3, "over", "eq1")
print("boundary word:", boundary_path(d3).word.text())
for defn in (1, 2, 3):
    faces = [w.face for w in find_cutcells(d3, defn)]
    print(f"cutcells (definition {defn}):", faces)
w2 = find_cutcells(d3, 2)[0]
print("a definition-2 witness: boundary preimage components", w2.components,
      "(two bare vertex visits, hence not definition 3)")
