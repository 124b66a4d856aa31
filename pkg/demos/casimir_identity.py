#!/usr/bin/env python3
"""The structural identity behind the whole construction.

Summing Lie_e after Lie_e* over the dual basis pairs of the projective
algebra gives the Casimir operator.  On operator space it splits exactly
into a degree-preserving part (which only sees the fiber variables) and a
degree-lowering correction (one coefficient derivative per step).  The
split is what turns the eigenvector prolongation into a triangular system.
"""

import random
from fractions import Fraction

from projquant import (Context, casimir_correction, casimir_direct,
                       casimir_symbol, format_poly)
from projquant.sampling import random_operator

rng = random.Random(2)
n = 2
ctx = Context(n, (Fraction(1, 3), Fraction(-1, 2)), Fraction(2, 5))
op = random_operator(rng, ctx, 2, 2)

print("Random operator body:")
print("   ", format_poly(op.body))

direct = casimir_direct(op)
print()
print("Direct summation over the", (n + 1) ** 2 - 1, "dual basis pairs:")
print("   ", format_poly(direct.body))

preserving = casimir_symbol(op)
lowering = casimir_correction(op)
print()
print("Degree-preserving part:")
print("   ", format_poly(preserving.body))
print("Degree-lowering correction:")
print("   ", format_poly(lowering.body))

print()
print("direct == preserving + lowering:",
      direct.body == preserving.body + lowering.body)
