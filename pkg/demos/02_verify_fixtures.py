"""Verify the eight embedded tours: line sums, diagonals, subcubes.

Run: python demos/02_verify_fixtures.py
"""
from artifact.formats import fixtures, emit_layers
from artifact.verifier import verify, complement

recs = fixtures()
print(emit_layers(recs[0].arrangement))

for r in recs:
    rep = verify(r.arrangement)
    print(f"tour {r.id} ({r.source}): closed={rep.is_closed} magic={rep.ortho_magic} "
          f"D={list(rep.diag_sums)} printed={r.printed_diagonals} subcubes={set(rep.subcube_sums)}")

# the complement n -> 65 - n runs the same path backwards and stays magic
c = complement(recs[0].arrangement)
rep = verify(c)
print("\ncomplement of tour 1: magic", rep.ortho_magic, "closed", rep.is_closed, "D", rep.diag_sums)
