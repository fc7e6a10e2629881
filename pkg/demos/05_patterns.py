"""Quads, the squares-and-diamonds test and cyclic symmetry of closed tours.

Run: python demos/05_patterns.py
"""
from artifact.formats import fixtures
from artifact.patterns import classify_pattern, cyclic_order, magic_shifts

for r in fixtures():
    rep, kind = classify_pattern(r.arrangement)
    planar = sum(q.is_planar for q in rep.quads)
    print(f"tour {r.id}: {kind:22s} closed quads {rep.n_cycles}/16, planar {planar}/16, "
          f"cyclic order {cyclic_order(r.arrangement)}, magic shifts {magic_shifts(r.arrangement)}")

q = classify_pattern(fixtures()[0].arrangement)[0].quads[0]
print("\ntour 1, values 1..4 sit on cells", q.cells, "closing into a knight cycle:", q.is_cycle)
