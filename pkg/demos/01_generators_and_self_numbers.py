#!/usr/bin/env python3
"""Tour of the inverse digit-sum map.

A generator of u is any v with v + s(v) = u, where s is the base-b digit
sum.  Numbers without generators are self numbers; numbers with two or more
are junction numbers.  This script walks the basic queries and shows the
brute-force and recurrence paths agreeing.
"""

from junctionlab import (
    canonical_rep,
    count_generators,
    generator_window,
    generators,
    generators_bruteforce,
    smallest_with_count_scan,
    step,
    stream_by_count,
)

print("== the step map in base 10 ==")
for v in (91, 100, 280):
    print(f"  f({v}) = {step(v, 10)}")

print("\n== generators of 101 ==")
print("  window to scan:", generator_window(101, 10))
print("  brute force   :", generators_bruteforce(101, 10))
print("  recurrence    :", generators(101, 10))

print("\n== the recurrence reaches far beyond any scan ==")
u = 10**13 + 1
m, c, k = canonical_rep(u, 10)
print(f"  10^13+1 = {c}*(10^{m}+1) + {k}")
print("  its generators:", generators(u, 10))
print("  F(10^13+1) =", count_generators(u, 10), "(= F(0) + F(115) = 1 + 2)")

print("\n== self numbers (no generator) ==")
print(" ", stream_by_count(10, lambda f: f == 0, 21))

print("\n== junction numbers (two or more generators) ==")
print(" ", stream_by_count(10, lambda f: f >= 2, 16))

print("\n== smallest number with exactly n generators, by exhaustive scan ==")
for n in (2, 3, 4):
    first = smallest_with_count_scan(2, n, 10**5)
    print(f"  base 2, n={n}: {first}")
print("  (base 2, n=4 gives 4102 = 2^12 + 6)")
