"""
Positivity certificates on truncated bases
==========================================

A weight system is a state when ``W(x x*) >= 0`` for every x.  On the span of
words with at most d chords this is a statement about one Gram matrix, which
is decided exactly.
"""

from fractions import Fraction

from chordweights import GramSpec, parse_labelling, psd_check, verify_state

spec = GramSpec(strands=2, max_chords=2, labelling=parse_labelling("sym:2,sym:2"), n=2)
rep = verify_state(spec)
for w, row in zip(rep.basis, rep.matrix):
    print(f"{str(w):18s}", " ".join(f"{str(x):>5s}" for x in row))
print("psd:", rep.psd, " pivots:", [str(p) for p in rep.pivots], " unit:", rep.unit_value)

###############################################################################
# A matrix that fails comes back with a rational witness vector.

bad = psd_check([[1, 2], [2, 1]])
print("psd:", bad.psd, " witness:", [str(x) for x in bad.witness])

###############################################################################
# Partition labels outside symmetric and exterior powers still get a report,
# but no certificate is claimed for them.

rep = verify_state(GramSpec(2, 1, parse_labelling("part:[2,1],std"), 3))
print(rep.psd, rep.theorem_instance, rep.notes)

###############################################################################
# Reports serialise with exact rationals as strings.

print(rep.to_json(indent=1)[:200], "...")
assert Fraction(rep.to_dict()["unit_value"]) == rep.unit_value
