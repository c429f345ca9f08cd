"""
Young symmetrisers in the symmetric group algebra
=================================================

Each strand label picks a Young symmetriser acting on its own block of points.
"""

from chordweights import (
    Partition,
    RepLabel,
    Tableau,
    canonical_tableau,
    labelling_symmetriser,
    normalization_constant,
    symmetriser,
    unnormalized_symmetriser,
)

t = Tableau(((1, 2), (3,)))
raw = unnormalized_symmetriser(t)
print("row sum times signed column sum:")
print(raw)

# raw^2 = alpha raw; alpha is 3 for the shape (2,1)
print("alpha =", normalization_constant(raw))

c = symmetriser(t)
print("idempotent:", c * c == c, "  self-adjoint:", c.star() == c)

###############################################################################
# Canonical tableaux are filled decreasingly, row by row.

print(canonical_tableau(Partition((5, 3, 1, 1))))

###############################################################################
# A labelling symmetriser is a product of small symmetrisers on disjoint blocks.

c_rho = labelling_symmetriser([RepLabel.sym(2), RepLabel.ext(2)])
print(c_rho)
assert c_rho * c_rho == c_rho
print("self-adjoint:", c_rho.star() == c_rho)
