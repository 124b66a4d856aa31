#!/usr/bin/env python3
"""Where the quantization can fail: resonant and critical shifts.

A shift value is resonant when two Casimir eigenvalues of different degrees
collide, and critical when the collision can actually be reached by the
degree-lowering correction.  Criticality admits a complete verdict thanks to
an increasing lower-bound function; resonances exist at unbounded order, so
their enumeration is always capped.
"""

from fractions import Fraction

from projquant import (classify_shift, critical_bound_index,
                       critical_lower_bound, critical_values_in_interval)

n = 2

print("The lower bound function (degree -> smallest possible critical shift):")
for i in range(1, 9):
    print(f"    f({i}) = {critical_lower_bound(n, i)}")

print()
print("All critical shifts in [1, 2] for n = 2, with witnessing tuples:")
for delta, tuples in critical_values_in_interval(n, 1, 2):
    labels = ", ".join(f"({t.i},{t.p};{t.j},{t.q})" for t in tuples)
    print(f"    {str(delta):>5}  via  {labels}")

print()
print("Shift 0 is resonant but never critical (n = 2):")
result = classify_shift(n, Fraction(0), 8)
print(f"    verdict: {result.kind}")
for t in result.tuples:
    print(f"    witness ({t.i},{t.p};{t.j},{t.q}), critical: {t.critical}")
bound = critical_bound_index(n, Fraction(0))
print(f"    criticality certified: every degree >= {bound} has its lower "
      f"bound above 0, so no critical tuple exists for this shift")

print()
print("In dimension one every resonance is critical:")
result = classify_shift(1, Fraction(5, 2), 6)
print(f"    shift 5/2 verdict: {result.kind}")
for t in result.tuples:
    print(f"    witness ({t.i},{t.p};{t.j},{t.q})")
