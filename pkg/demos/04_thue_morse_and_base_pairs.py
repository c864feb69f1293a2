#!/usr/bin/env python3
"""Which residue class wins, and the Thue-Morse surprise.

K(n) is attained at a unique index tau(n) in the residue set mod b-1.  In
base 5 that index sequence is the classical Thue-Morse sequence (shifted by
one); base 4 yields a ternary pattern with exponentially growing blocks; and
base 7 is base 4 with the symbols 1 and 2 swapped, an instance of the exact
structural equivalence between bases 2m and 4m-1.
"""

from junctionlab import KTable, base_pair_equivalent, quasi_rep, tau_sequence

print("== base 5: the Thue-Morse sequence ==")
t5 = KTable(5)
tau5 = tau_sequence(t5, 32)
print("  tau(1..32):", "".join(map(str, tau5)))
flips = all(tau5[n - 1] == 1 - tau5[n // 2 - 1] for n in range(2, 33, 2))
print("  tau(2k) = 1 - tau(k):", flips)

print("\n== base 4: growing blocks 1^d, (2,0)^d, 0 with d = (10*4^j-1)/3 ==")
t4 = KTable(4)
tau4 = tau_sequence(t4, 120)
print("  tau(1..60): ", "".join(map(str, tau4[:60])))
print("  tau(61..120):", "".join(map(str, tau4[60:120])))

print("\n== base 7 repeats base 4 with 1 and 2 interchanged ==")
t7 = KTable(7)
tau7 = tau_sequence(t7, 60)
swap = {0: 0, 1: 2, 2: 1}
print("  base 7      :", "".join(map(str, tau7)))
print("  swapped b=4 :", "".join(str(swap[x]) for x in tau4[:60]))

print("\n== the base pair (4, 7) shares its whole computation skeleton ==")
ok, _ = base_pair_equivalent(2, 24)
print("  identical quasi-representations for n <= 24:", ok)
q4 = quasi_rep(t4.extend_to(11), 11, t4.tau_index(11))
q7 = quasi_rep(t7.extend_to(11), 11, t7.tau_index(11))
print("  K(11) chain in base 4:", q4)
print("  K(11) chain in base 7:", q7)

print("\n== more pairs: (2,3), (6,11), (10,19) ==")
for m in (1, 3, 5):
    ok, _ = base_pair_equivalent(m, 16)
    print(f"  bases {2*m:2d} and {4*m-1:2d}: equivalent to n=16: {ok}")
