"""Graded pieces of quotient path algebras.

A presentation file declares a quiver with integer arrow degrees and a
homogeneous relation set.  The rewriting engine completes the relations up
to a path-length cap and enumerates normal forms; the count in each degree
is the dimension of that graded piece, double-checked by recomputing at a
larger cap.
"""

from pathlib import Path

from gradedcy import (RewriteContext, graded_dimension, load_presentation,
                      truncated_rewriting)

DATA = Path(__file__).resolve().parent.parent / "data"


def show(name, degrees=6):
    pres = load_presentation(DATA / name)
    print(f"== {name} ==")
    rs = truncated_rewriting(pres, 6)
    quiver = pres.quiver
    print("  rewrite rules:")
    for lhs, src, rhs in rs.rules:
        word = "*".join(quiver.arrows[i].name for i in lhs)
        print(f"    {word} -> {rhs.format(pres.ctx)}")
    dims = []
    for w in range(0, -degrees - 1, -1):
        d, _ = graded_dimension(pres, w, quiver.vertices[0],
                                quiver.vertices[0], cap=degrees + 2)
        dims.append(d)
    print(f"  dimensions in degrees 0..-{degrees}: {dims}")
    print()


# Two commuting variables: one rule, binomial dimensions 1, 2, 3, ...
show("k_xy.pres")

# The sum-of-squares relation in three variables: completion adds an
# overlap rule, and the dimensions follow the recursion d(n) = 3d(n-1) - d(n-2)
show("skew_3.pres")

# Weighted degrees -2 and -3: pieces are numbers of monomials 2m + 3n = w
show("k_xy_23.pres")

# The graded pieces vanish in positive degrees for any negatively graded
# presentation; the basis object also splits counts by vertex pair.
pres = load_presentation(DATA / "k_xyz.pres")
rc = RewriteContext(pres, 8)
print("three variables, degree -3 basis size:", rc.basis(-3).dim())
print("positive degree piece:", rc.basis(2).dim())
