#!/usr/bin/env python3
"""Walk through the cycle structure of a factored LFSR.

An LFSR with characteristic polynomial f(x) = (x+1)(x^2+x+1)(x^4+x^3+x^2+x+1)
produces 2^7 = 128 sequences, split into shift-equivalence classes
(cycles).  This demo shows how the per-factor data determines the full
structure, and how one representative state per cycle is found without
ever expanding a cycle.
"""

from cyclejoin import FactoredLfsr, format_poly, state_to_str

inst = FactoredLfsr.from_strings("11,111,11111")

print("characteristic polynomial f =", format_poly(inst.poly), f"(degree {inst.n})")
print()

print("per-factor data:")
for i, f in enumerate(inst.factors, start=1):
    states = ", ".join(state_to_str(s, f.degree) for s in f.states)
    print(
        f"  p{i} = {format_poly(f.poly):>6}  degree {f.degree}, order {f.order}, "
        f"t = {f.t}, associated primitive {format_poly(f.assoc_primitive)}"
    )
    print(f"          nonzero-cycle representatives: {states}")
print()

# A factor of order e with index t contributes t nonzero cycles of period e.
# Cycles of the product register combine one choice per factor plus relative
# shifts; the representative state is assembled through the state basis P.
print(f"the register has {inst.psi} cycles:")
print(f"{'idx':>4}  {'state':<7}  {'cycle':<28}  period")
for i, c in enumerate(inst.cycles):
    v = inst.representative(i)
    print(f"V{i + 1:<3}  {state_to_str(v, inst.n)}  {c.describe():<28}  {c.period:>5}")

total = sum(c.period for c in inst.cycles)
print()
print(f"periods sum to {total} = 2^{inst.n}: every state lies on exactly one cycle")
print(f"the special state (1,0,...,0) lies on cycle V{inst.cycles.special_index + 1}")
