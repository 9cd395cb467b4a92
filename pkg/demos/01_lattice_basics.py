"""Walkthrough: graphs, the intersection lattice, and the chi function.

A resolution graph is a weighted tree.  From it we get an exact negative
definite intersection form, the anti-dual basis E*_v, the canonical class K
(adjunction), and the Riemann-Roch quadratic chi(x) = -(x, x - K)/2.
Everything is exact: integers and fractions, never floats.
"""

from fractions import Fraction

from plumblat import ResolutionGraph, build_form

# the E8 tree: a chain of seven (-2)-curves with one leaf on the fifth vertex
e8 = ResolutionGraph.build(
    [(i, -2) for i in range(1, 9)],
    [(i, i + 1) for i in range(1, 7)] + [(5, 8)],
    name="e8")
f = build_form(e8)

print("intersection matrix rows:")
for row in f.matrix:
    print("  ", row)
print("det(-I) =", f.det_neg, " (unimodular: the link is an integral homology sphere)")

# the anti-dual basis pairs to -1 against its own vertex and 0 elsewhere,
# and always has strictly positive coordinates
d5 = f.dual(5)
print("E*_5 =", d5)
print("pairings:", [f.pairing_vertex(d5, v) for v in f.ids])

# adjunction determines the canonical class; for ADE trees it vanishes
print("K =", f.canonical())

# chi is a convex integer-valued quadratic on the lattice
z = f.cycle([2, 3, 4, 5, 6, 4, 2, 3])
print("chi of the fundamental cycle:", f.chi(z))
print("chi of half of it:", f.chi(z.scale(Fraction(1, 2))))

# a weighted tree that fails negative definiteness is rejected at build time
from plumblat import NotNegativeDefinite

bad = ResolutionGraph.build([(1, -2)] + [(i, -2) for i in range(2, 6)],
                            [(1, i) for i in range(2, 6)])
try:
    build_form(bad)
except NotNegativeDefinite as exc:
    print("rejected degenerate tree:", exc)
