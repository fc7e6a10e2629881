"""The 48 cube symmetries, Frenicle keys and primary keys.

Run: python demos/03_symmetry_classes.py
"""
from artifact.formats import fixtures
from artifact import symmetry as S
from artifact.verifier import complement

print("transforms:", len(S.TRANSFORMS), " example:", S.TRANSFORMS[13])
print("colour-swapping transforms:", int(S.CFLAG.sum()))

recs = fixtures()
a = recs[0].arrangement
img = S.apply(29, a)
print("\ntour 1 and its image under transform 29 share a Frenicle key:",
      S.frenicle_canonical(a) == S.frenicle_canonical(img))
print("tour 1 and tour 2 share a Frenicle key:",
      S.frenicle_canonical(a) == S.frenicle_canonical(recs[1].arrangement))

# primary keys also forget where the numbering starts and which way it runs
shifted = (a.values - 1 + 16) % 64 + 1
print("tour 1 vs its renumbering by 16, primary keys equal:",
      S.primary_canonical(a) == S.primary_canonical(shifted))
print("tour 1 vs complement, primary keys equal:",
      S.primary_canonical(a) == S.primary_canonical(complement(a)))

cen = S.build_census(r.arrangement for r in recs)
print("\ncensus of the eight fixtures alone:", cen.as_dict())
