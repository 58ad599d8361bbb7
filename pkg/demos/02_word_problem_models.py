"""Exact word problems in Z^d * F_k and the cell-embedding condition.

Each gallery presentation ships a model: generator images in a free
product of a lattice and a free group, with relators dying by
construction.  Normal forms make triviality decidable, the lattice
projection gives plane coordinates, and Wise's embedding condition checks
that no proper boundary arc of a cell dies in the group.
"""

from vankampen.gallery import presentation
from vankampen.group_models import cell_embeds, is_trivial, normal_form, project_z2

p, m = presentation("thm1")
print("presentation:", p)

comm = p.word("a1 a2 b1 b2 a2^-1 a1^-1 b2^-1 b1^-1")  # [a1 a2, b1 b2] = [a, b]
print("[a,b] trivial:", is_trivial(comm, m))
print("a1 b1 normal form:", normal_form(p.word("a1 b1"), m))

for g in ("a1", "b1", "c1", "c2"):
    print(f"pi({g}) =", tuple(project_z2(p.word(g), m)))

for idx, r in enumerate(p.relators):
    print(f"relator {idx} ({r.text()}) embeds:", cell_embeds(r, m))

p2, m2 = presentation("thm2")
print("thm2 relator", p2.relators[0].text(), "embeds:", cell_embeds(p2.relators[0], m2),
      " (the commutator subword is trivial in Z^2)")
