#!/usr/bin/env python3
"""The three second-order critical shifts and what happens at each.

At (n+3)/(n+1) the prolongation of pure second-order symbols is obstructed
unless the first weight is -1/(n+1).  At (n+2)/(n+1) a one-parameter family
of prolongations exists for three special weight pairs.  At shift 1 with
vanishing weights everything is solvable but never unique, and two
divergence-style maps are equivariant under every vector field.
"""

from fractions import Fraction

from projquant import (Context, ObstructionError, SymbolPoly, format_poly,
                       order2_critical_family, parse_poly, quantize, t1, t2)

n = 2

print(f"Shift (n+3)/(n+1) = {Fraction(n + 3, n + 1)}")
for lam1 in (Fraction(0), Fraction(-1, n + 1)):
    ctx = Context.from_delta(n, (lam1, Fraction(0)), Fraction(n + 3, n + 1))
    P = SymbolPoly(parse_poly("x1*a1*a1", n), ctx)
    try:
        result = quantize(P)
        slots = sorted(tuple(s) for s in result.free_slots)
        print(f"    weight {lam1}: solvable, free slots {slots}")
    except ObstructionError as err:
        print(f"    weight {lam1}: obstructed at block {tuple(err.blocked)} "
              f"by {format_poly(err.obstruction.body)}")

print()
print(f"Shift (n+2)/(n+1) = {Fraction(n + 2, n + 1)}: a free parameter")
ctx = Context.from_delta(n, (Fraction(0), Fraction(0)), Fraction(n + 2, n + 1))
P = SymbolPoly(parse_poly("x1*x2*a1*a2", n), ctx)
for k in (Fraction(0), Fraction(1)):
    member = order2_critical_family(P, k)
    print(f"    k = {k}:  {format_poly(member.body)}")
print("    engine's canonical choice is k = 0:",
      quantize(P).operator.body == order2_critical_family(P, 0).body)

print()
print("Shift 1, weights (0, 0): the two invariant maps")
ctx1 = Context.from_delta(n, (Fraction(0), Fraction(0)), Fraction(1))
P1 = SymbolPoly(parse_poly("x1*x2*(a1*b2 - a2*b1)", n), ctx1)
print("    t1:", format_poly(P1.body), "->", format_poly(t1(P1).body))
P2 = SymbolPoly(parse_poly("x1^2*a1", n), ctx1)
print("    t2:", format_poly(P2.body), "->", format_poly(t2(P2).body))
