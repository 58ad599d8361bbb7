"""Whole-complex scans: the generalized Dehn property, mechanically.

Every certified-minimal multi-cell disk over the thm2 complex has a spur,
shell, or definition-1 cutcell; over the thm1 complex the same holds with
the strongest cutcells.  Pieces and the no-big-pieces condition round out
the checks.
"""

from vankampen.dehn_props import (
    big_pieces,
    check_generalized_dehn,
    has_big_pieces,
)
from vankampen.gallery import complex_for, presentation

for gid, defn, bound in (("thm2", 1, 4), ("thm1", 3, 3), ("eq1", 1, 3)):
    p, m = presentation(gid)
    x = complex_for(gid)
    rep = check_generalized_dehn(x, defn, bound, model=m)
    verdict = "holds" if rep.holds else f"VIOLATED ({len(rep.violations)} diagrams)"
    print(f"{gid}: generalized Dehn, definition {defn}, area <= {bound}: {verdict} "
          f"[scanned {rep.scanned}]")

print()
for gid in ("thm1", "eq2"):
    p, _m = presentation(gid)
    if has_big_pieces(p):
        ws = sorted({piece.word.text() for piece in big_pieces(p)})
        print(f"{gid}: big pieces present, e.g. {ws[:3]}")
    else:
        print(f"{gid}: no big pieces")
