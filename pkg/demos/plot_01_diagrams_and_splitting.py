"""
Horizontal chord diagrams and tensor splitting
==============================================

Diagrams are words in chords ``(i,j)``, read from the bottom strand end
upwards.  Stacking is concatenation and the star reverses the word.
"""

from chordweights import ChordWord, DiagramExpr, four_t_generator, parse_diagram, tensor_split

# a diagram on three strands: (2,3) at the bottom, then (1,3) above it
c = parse_diagram("3: (2,3) (1,3)")
print(c, "   star:", c.star())

# stacking b on top of a
a = ChordWord(3, [(1, 2)])
b = ChordWord(3, [(2, 3)])
print("a then b:", a * b)

###############################################################################
# Splitting replaces strand i by a block of widths[i] parallel strands and
# sums over every lift of every chord.

for widths in [(1, 2, 1), (3, 1, 1)]:
    print(f"split {widths}:")
    for word, coeff in tensor_split(c, widths).terms.items():
        print(f"  {str(coeff):>3s}  {word}")

###############################################################################
# Linear combinations form the diagram algebra before taking the quotient.
# The 4T relation is one of the generators of the ideal.

g = four_t_generator(1, 2, 3, 3)
print("4T:", g)
x = DiagramExpr.from_word(c) * 2 - DiagramExpr.one(3)
print("x x*:", x * x.star())
