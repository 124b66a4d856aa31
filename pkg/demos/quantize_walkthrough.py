#!/usr/bin/env python3
"""From symbols to operators and back.

The prolongation solves a triangular system: each lower-degree layer is the
degree-lowering correction of the previous one divided by an eigenvalue gap.
This script quantizes a second-order symbol, reads the result as an
operator, applies it to densities, checks the explicit closed form, and
inverts the construction.
"""

from fractions import Fraction

from projquant import (Context, Density, SymbolPoly,
                       apply_operator, format_poly, parse_poly, quantize,
                       quantize_order2_closed, symbol_map)

n = 2
lam1, lam2 = Fraction(1, 3), Fraction(0)
ctx = Context.from_delta(n, (lam1, lam2), Fraction(1, 2))
print(f"Context: n={n}, weights=({lam1}, {lam2}), shift={ctx.delta}")

P = SymbolPoly(parse_poly("x1*x2*a1*a2", n), ctx)
print("Symbol:  ", format_poly(P.body))

result = quantize(P)
print("Operator:", format_poly(result.operator.body))
print("Unique:  ", result.unique)

closed = quantize_order2_closed(P)
print("Matches the explicit closed form:", closed.body == result.operator.body)

f = Density(parse_poly("x1^2*x2", n), lam1)
g = Density(parse_poly("x2^2", n), lam2)
value = apply_operator(result.operator, f, g)
print("Applied to (x1^2*x2, x2^2):", format_poly(value.value),
      f"  [a density of weight {value.weight}]")

back = symbol_map(result.operator)
print("Symbol map inverts the prolongation:", back.symbol.body == P.body)

# order-zero and order-one layers of a mixed-degree symbol quantize
# independently and sum
Q = SymbolPoly(parse_poly("x1*a1 + x2^2", n), ctx)
print()
print("Mixed degrees are prolonged source by source:")
print("   ", format_poly(Q.body), "->", format_poly(quantize(Q).operator.body))
