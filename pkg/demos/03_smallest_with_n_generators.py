#!/usr/bin/env python3
"""The K-table: smallest numbers with exactly n generators, per residue class.

Row n is computed from rows floor(n/2) and ceil(n/2) alone.  The exponent
B(n) comes from minimizing a cross sum of the half rows; each per-residue
minimum K_i(n) then sits just above b**B(n).  The structured search at the
bottom re-derives a row minimum independently, straight from the counting
recurrence.
"""

from junctionlab import KTable, render, smallest_with_count_structured, to_natural
from junctionlab.towerint import add, compare, from_natural, power_of_base

t = KTable(10).extend_to(8)

print("== base 10, rows 1..5 ==")
for n in range(1, 6):
    row = t.row(n)
    b_str = "-" if row.B is None else render(row.B)
    print(f"  n={n}: B={b_str:28s} K(n)={render(row.Kmin)}")

print("\n== the classical checkpoints ==")
print("  K(2) =", to_natural(t.Kmin(2), 5))
print("  K(3) =", render(t.Kmin(3)), " (10^13+1)")
print("  K(4) =", render(t.Kmin(4)), " (the conjectured 10^24+102, now exact)")
print("  K(5) =", render(t.Kmin(5)))
print("  K(8) =", render(t.Kmin(8)))

print("\n== row internals at n=4 ==")
row = t.row(4)
print("  J(4) =", sorted(row.J))
for i in t.indices:
    print(f"  K_{i}(4) = {render(row.K[i]):24s} c={row.c[i]} h={row.h[i]}")

print("\n== independent confirmation of K(5) by candidate search ==")
hit = smallest_with_count_structured(10, 5, 2 * 10**12)
print(f"  search result: 10^{hit.m} + {1 + hit.k}")
same = compare(t.Kmin(5), add(power_of_base(t.B(5)), from_natural(1 + hit.k, 10))) == 0
same &= compare(t.B(5), from_natural(hit.m, 10)) == 0
print("  equals the table value:", same)
