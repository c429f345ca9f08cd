"""
Evaluating gl_n weight systems
==============================

The weight of a diagram is computed by splitting it according to the labels,
mapping chords to transpositions and evaluating ``n^(#cycles)`` after
multiplying by the labelling symmetriser.  The result is a polynomial in n.
"""

from chordweights import (
    ChordWord,
    parse_diagram,
    parse_labelling,
    rep_dimension,
    tensor_oracle,
    weight,
    weight_std_poly,
)

c = parse_diagram("3: (1,2) (1,3) (2,3)")
print("standard weight:", weight_std_poly(c))

rho = parse_labelling("sym:2,ext:2,std")
wv = weight(c, rho)
print("labelled weight:", wv.poly)
for n in (2, 3, 4):
    print(f"  n={n}: {wv.at(n)}")

###############################################################################
# The chord-less diagram evaluates to the product of the label dimensions.

unit = weight(ChordWord.identity(3), rho, 3).value
print("unit:", unit, "=", [rep_dimension(lab, 3) for lab in rho.labels])

###############################################################################
# An independent check builds the operators on (C^n)^(|rho|) as sparse
# integer matrices and takes a trace.

for n in (2, 3):
    print(f"n={n}: pipeline {weight(c, rho, n).value}, tensor trace {tensor_oracle(c, rho, n)}")
