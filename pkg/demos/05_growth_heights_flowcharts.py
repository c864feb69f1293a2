#!/usr/bin/env python3
"""How fast K(n) grows, and what its computation graph looks like.

K(n+1) > b*K(n) always (one small odd-base exception at n=2), and K(n) is a
tower of height about log2(n): each doubling of n stacks one more exponent.
The flow-chart export draws every K_i(n) = c*(b**B(n)+1) + K_j(h) instance
as an arc, ready for graphviz.
"""

from junctionlab import KTable, conjectured_height, toy_sequence_a
from junctionlab.cli import build_flowchart, ceil_shaded_arc_rows, flowchart_dot
from junctionlab.towerint import compare, height_of, render, scale_by_natural, to_natural

print("== growth: K(n+1) > 10 * K(n) in base 10 ==")
t = KTable(10).extend_to(12)
for n in range(1, 12):
    gt = compare(t.Kmin(n + 1), scale_by_natural(t.Kmin(n), 10)) > 0
    assert gt
print("  verified for n = 1..11 (exactly, on tower values)")

print("\n== heights of K(2)..K(16), base 10 ==")
heights = [t.extend_to(16).height(n) for n in range(2, 17)]
print("  computed   :", heights)
print("  height law :", [conjectured_height(10, n) for n in range(2, 17)])

print("\n== the toy model a(n) = 2^(a(ceil n/2) + a(floor n/2)) ==")
a = toy_sequence_a(17)
print("  a(1..12) =", [to_natural(a[n], 40) for n in range(1, 13)])
print("  a(17)    =", render(a[17]), " height", height_of(a[17]))

print("\n== flow-chart export (graphviz DOT) ==")
ch = build_flowchart(5, 8)
dot = flowchart_dot(ch)
print(f"  base 5, rows to n=8: {len(ch.knodes)} K-nodes, {len(ch.enodes)} exponent nodes")
print("  first lines of the DOT text:")
for line in dot.splitlines()[:8]:
    print("   ", line)

print("\n== where the argmin shortcut fails (base 9) ==")
ch9 = build_flowchart(9, 16)
missing = sorted(set(ch9.enodes) - ceil_shaded_arc_rows(ch9))
print("  rows whose exponent node gets no arc from the half-row minimum:", missing)
