#!/usr/bin/env python3
"""Exact arithmetic on tower-of-exponentials integers.

The sparse radix form (1/gamma) * sum(alpha_i * b**d_i) keeps numbers like
10**((10**13+116)/9) + 102 as first-class exact values: comparable, addable,
classifiable mod b-1, without ever writing out their digits (this one has
about 1.1 * 10**12 of them).
"""

from junctionlab import (
    OVERFLOW,
    add,
    compare,
    divide_exact,
    from_natural,
    height_of,
    parse,
    power_of_base,
    render,
    residue_mod_bm1,
    scale_by_natural,
    to_natural,
)

print("== building the fifth row value of the base-10 hierarchy ==")
numer = from_natural(10**13 + 116, 10)
B5 = divide_exact(numer, 9)
print("  exponent B(5)      :", render(B5))
K5 = add(power_of_base(B5), from_natural(102, 10))
print("  K(5)               :", render(K5))
print("  residue mod 9      :", residue_mod_bm1(K5))
print("  decimal?           :", to_natural(K5, 1000), "(too many digits, by design)")
assert to_natural(K5, 1000) is OVERFLOW

print("\n== representations are not unique, comparison still is ==")
two_a = parse("(1/4)*(5^{1}+3)", 5)
two_b = from_natural(2, 5)
print("  (1/4)*(5+3) vs 2   :", {-1: "<", 0: "==", 1: ">"}[compare(two_a, two_b)])

print("\n== the grammar round-trips ==")
s = render(K5)
print("  rendered           :", s)
print("  parse(render) == x :", compare(parse(s, 10), K5) == 0)

print("\n== exact ordering at astronomical scale ==")
K6 = add(power_of_base(divide_exact(from_natural(2 * 10**13 + 16, 10), 9)),
         parse("10^{13}+2", 10))
print("  K(6)               :", render(K6))
print("  K(6) > 10*K(5)     :", compare(K6, scale_by_natural(K5, 10)) > 0)

print("\n== tower heights ==")
for label, x in [("101", from_natural(101, 10)), ("10^13+1", parse("10^{13}+1", 10)),
                 ("K(5)", K5)]:
    print(f"  height({label}) = {height_of(x)}")
