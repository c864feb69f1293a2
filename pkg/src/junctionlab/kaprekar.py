"""The K-table engine: smallest numbers with n generators, per residue class.

For each base b the table tracks, per n, the exponent B(n), the per-residue
minima K_i(n) for i in the index set, the argmin data (J(n), c_{i,n},
h_{i,n}), and the overall minimum K(n) with its attained index tau(n).  Rows
are built strictly bottom-up; row n needs only rows floor(n/2) and
ceil(n/2).  All values are TowerInts, so rows remain exact long after the
numbers stop being materializable.

Row recurrence (n >= 2), writing H = ceil(n/2), L = floor(n/2):

    J(n)    = argmin over l of  K_l(H) + K_{-l-2}(L)
    B(n)    = (that minimum + 2) / (b - 1)
    c_{i,n} = smallest c >= 1 with i-2c in J(n) or 2c-i-2 in J(n)
    h_{i,n} = H if 2c-i-2 not in J(n) else L
    K_i(n)  = c_{i,n} * (b**B(n) + 1) + K_{i-2c}(h_{i,n})
    K(n)    = min_i K_i(n)          (unique argmin: residues differ)

Bases 2 and 3 admit the short fast_path recurrences, kept as an independent
cross-check of the general engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .digits import check_base
from .towerint import (
    TowerInt,
    add,
    compare,
    divide_exact,
    from_natural,
    height_of,
    one,
    power_of_base,
    residue_mod_bm1,
    scale_by_natural,
    zero,
)

__all__ = [
    "index_set",
    "neg_index",
    "KTable",
    "fast_path",
    "QuasiRep",
    "quasi_rep",
    "quasi_value",
    "base_pair_equivalent",
    "tau_sequence",
    "conjectured_height",
    "toy_sequence_a",
    "toy_conjectured_height",
]


def index_set(b: int) -> tuple[int, ...]:
    """Residues mod b-1 that K_i ranges over: all of them for even b, the
    even ones for odd b (odd targets have no generators there)."""
    check_base(b)
    if b % 2 == 0:
        return tuple(range(b - 1))
    return tuple(range(0, b - 2, 2))


def neg_index(i: int, b: int) -> int:
    """The partner residue -i-2 mod (b-1)."""
    return (-i - 2) % (b - 1)


@dataclass(frozen=True)
class Row:
    n: int
    K: dict  # index -> TowerInt
    Kmin: TowerInt
    tau_index: int
    B: TowerInt | None = None  # undefined for n = 1
    J: frozenset | None = None
    c: dict | None = None
    h: dict | None = None
    kprime: dict | None = None  # K'_i(n) for n >= 2


class KTable:
    """Per-base table of K_i(n) rows, grown on demand with extend_to().

    A finished table is immutable in practice: rows are only appended, never
    rewritten, so concurrent readers of built rows are safe.
    """

    def __init__(self, base: int):
        check_base(base)
        self.base = base
        self.indices = index_set(base)
        self._rows: list[Row | None] = [None, self._seed_row()]

    def _seed_row(self) -> Row:
        b = self.base
        K: dict[int, TowerInt] = {}
        if b % 2 == 0:
            for lam in range(0, (b - 2) // 2 + 1):
                K[2 * lam] = from_natural(2 * lam, b)
            for lam in range(0, (b - 4) // 2 + 1):
                K[2 * lam + 1] = from_natural(b + 2 * lam, b)
        else:
            for lam in range(0, (b - 3) // 2 + 1):
                K[2 * lam] = from_natural(2 * lam, b)
        assert sorted(K) == sorted(self.indices)
        return Row(n=1, K=K, Kmin=K[0], tau_index=0)

    # -- access ----------------------------------------------------------

    @property
    def built_to(self) -> int:
        return len(self._rows) - 1

    def row(self, n: int) -> Row:
        if n < 1:
            raise ValueError("rows start at n = 1")
        self.extend_to(n)
        return self._rows[n]

    def K(self, n: int, i: int) -> TowerInt:
        return self.row(n).K[i]

    def Kmin(self, n: int) -> TowerInt:
        return self.row(n).Kmin

    def B(self, n: int) -> TowerInt:
        row = self.row(n)
        if row.B is None:
            raise ValueError("B(1) is not defined")
        return row.B

    def J(self, n: int) -> frozenset:
        return self.row(n).J

    def cval(self, n: int, i: int) -> int:
        return self.row(n).c[i]

    def hval(self, n: int, i: int) -> int:
        return self.row(n).h[i]

    def kprime(self, n: int, i: int) -> TowerInt:
        return self.row(n).kprime[i]

    def tau_index(self, n: int) -> int:
        return self.row(n).tau_index

    def height(self, n: int) -> int:
        """Tower height of the row minimum K(n)."""
        return height_of(self.Kmin(n))

    def eqred_holds(self, n: int) -> bool:
        """Whether the overall minimum of row ceil(n/2) participates in the
        cross-sum minimum that defines B(n) (i.e. its index lies in J(n))."""
        return self.tau_index((n + 1) // 2) in self.J(n)

    # -- construction ------------------------------------------------------

    def extend_to(self, n_max: int) -> "KTable":
        while self.built_to < n_max:
            self._rows.append(self._build_row(self.built_to + 1))
        return self

    def _build_row(self, n: int) -> Row:
        b = self.base
        hi, lo = (n + 1) // 2, n // 2
        Khi, Klo = self._rows[hi].K, self._rows[lo].K

        sums = {l: add(Khi[l], Klo[neg_index(l, b)]) for l in self.indices}
        min_l = min(self.indices, key=lambda l: _CmpKey(sums[l]))
        min_sum = sums[min_l]
        J = frozenset(l for l in self.indices if compare(sums[l], min_sum) == 0)

        B = divide_exact(add(min_sum, from_natural(2, b)), b - 1)
        cb1 = add(power_of_base(B), one(b))  # b**B(n) + 1

        K: dict[int, TowerInt] = {}
        cmap: dict[int, int] = {}
        hmap: dict[int, int] = {}
        kprime: dict[int, TowerInt] = {}
        for i in self.indices:
            c = 1
            while (i - 2 * c) % (b - 1) not in J and (2 * c - i - 2) % (b - 1) not in J:
                c += 1
                if c > b:
                    raise AssertionError(f"no admissible c for i={i}, n={n}, b={b}")
            h = hi if (2 * c - i - 2) % (b - 1) not in J else lo
            sub = self._rows[h].K[(i - 2 * c) % (b - 1)]
            Ki = add(scale_by_natural(cb1, c), sub)
            if b > 2 and residue_mod_bm1(Ki) != i:
                raise AssertionError(f"K_{i}({n}) residue broke in base {b}")
            K[i], cmap[i], hmap[i] = Ki, c, h
            cross = add(Khi[i], Klo[neg_index(i, b)])
            cross_swap = add(Klo[i], Khi[neg_index(i, b)])
            kprime[i] = cross if compare(cross, cross_swap) <= 0 else cross_swap

        tau_i = min(self.indices, key=lambda i: _CmpKey(K[i]))
        ties = [i for i in self.indices if compare(K[i], K[tau_i]) == 0]
        if len(ties) != 1:
            raise AssertionError(f"non-unique K(n) argmin {ties} at n={n}, b={b}")
        return Row(n=n, K=K, Kmin=K[tau_i], tau_index=tau_i, B=B, J=J, c=cmap, h=hmap, kprime=kprime)


class _CmpKey:
    __slots__ = ("v",)

    def __init__(self, v: TowerInt):
        self.v = v

    def __lt__(self, other):
        return compare(self.v, other.v) < 0


def fast_path(b: int, n_max: int) -> tuple[list, list]:
    """Base 2/3 shortcut: B(n) = (K(ceil) + K(floor) + 2) / (b - 1) and
    K(n) = b**B(n) + 1 + K(floor(n/2)).  Returns 1-indexed lists (B, K) with
    B[1] = None.  Must agree with the general engine."""
    if b not in (2, 3):
        raise ValueError("fast path exists for bases 2 and 3 only")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    Bs: list = [None, None]
    Ks: list = [None, zero(b)]
    for n in range(2, n_max + 1):
        hi, lo = (n + 1) // 2, n // 2
        Bn = divide_exact(add(add(Ks[hi], Ks[lo]), from_natural(2, b)), b - 1)
        Bs.append(Bn)
        Ks.append(add(power_of_base(Bn), add(one(b), Ks[lo])))
    return Bs, Ks


# ---------------------------------------------------------------------------
# quasi-positional representation


class QuasiRep(NamedTuple):
    """K_i(n) = sum_j alphas[j] * (b**B(ns[j]) + 1) + K_beta(1), with the ns
    a halving chain ending in {2, 3} (empty for n = 1)."""

    alphas: tuple
    ns: tuple
    beta: int


def quasi_rep(table: KTable, n: int, i: int) -> QuasiRep:
    b = table.base
    alphas: list[int] = []
    ns: list[int] = []
    cur_n, cur_i = n, i
    while cur_n > 1:
        c = table.cval(cur_n, cur_i)
        h = table.hval(cur_n, cur_i)
        alphas.append(c)
        ns.append(cur_n)
        cur_i = (cur_i - 2 * c) % (b - 1)
        cur_n = h
    return QuasiRep(tuple(alphas), tuple(ns), cur_i)


def quasi_value(table: KTable, rep: QuasiRep) -> TowerInt:
    """Evaluate a QuasiRep back to a TowerInt (for exact round-trip checks)."""
    b = table.base
    acc = table.K(1, rep.beta)
    for a, nj in zip(rep.alphas, rep.ns):
        cb1 = add(power_of_base(table.B(nj)), one(b))
        acc = add(acc, scale_by_natural(cb1, a))
    return acc


def base_pair_equivalent(m: int, n_max: int) -> tuple[bool, list]:
    """Check that bases b1 = 2m and b2 = 4m-1 produce identical
    quasi-positional representations for every n <= n_max and every index
    (under the residue-group identification i mod 2(2m-1) -> i mod (2m-1)).

    Returns (equivalent, mismatches); each mismatch is (n, i, rep1, rep2).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    b1, b2 = 2 * m, 4 * m - 1
    t1 = KTable(b1).extend_to(n_max)
    t2 = KTable(b2).extend_to(n_max)
    mod1 = b1 - 1

    def lift(r: int) -> int:  # the even residue mod 2(2m-1) mapping onto r
        return r if r % 2 == 0 else r + mod1

    mismatches = []
    for n in range(1, n_max + 1):
        for r in t1.indices:
            q1 = quasi_rep(t1, n, r)
            q2 = quasi_rep(t2, n, lift(r))
            if not (
                q1.alphas == q2.alphas
                and q1.ns == q2.ns
                and q2.beta % mod1 == q1.beta
            ):
                mismatches.append((n, r, q1, q2))
    return not mismatches, mismatches


# ---------------------------------------------------------------------------
# derived sequences


def tau_sequence(table: KTable, n_max: int) -> list[int]:
    """tau(n) for n = 1..n_max: the index attaining K(n), reported directly
    for even bases and halved for odd bases (where indices are even)."""
    table.extend_to(n_max)
    div = 1 if table.base % 2 == 0 else 2
    return [table.tau_index(n) // div for n in range(1, n_max + 1)]


def conjectured_height(b: int, n: int) -> int:
    """Observed tower-height law for K(n) (checked empirically, not proved):
    ceil(log2 n) plus 3 / 2 / 1 for b = 2 / even b >= 4 / odd b >= 5, and a
    shifted variant for b = 3.

    At n = 2 the odd-base formulas undershoot (K(2) = b+1 > b already has
    height 3), so Ht(K(2)) = 4 for b = 2 and 3 for b >= 3 is used directly.
    """
    check_base(b)
    if n < 2:
        raise ValueError("height law starts at n = 2")
    if n == 2:
        return 4 if b == 2 else 3
    ceil_log2 = (n - 1).bit_length()
    if b == 2:
        return ceil_log2 + 3
    if b == 3:
        t = 0
        while 5 * (1 << t) < n:
            t += 1
        return t + 4
    return ceil_log2 + (2 if b % 2 == 0 else 1)


def toy_sequence_a(n_max: int) -> list:
    """The model recurrence a(1) = 0, a(n) = 2**(a(ceil(n/2)) + a(floor(n/2)))
    on base-2 TowerInts.  Returns a 1-indexed list (index 0 is None)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    a: list = [None, zero(2)]
    for n in range(2, n_max + 1):
        a.append(power_of_base(add(a[(n + 1) // 2], a[n // 2])))
    return a


def toy_conjectured_height(n: int) -> int:
    """Observed heights of the model sequence for 11 <= n <= 40:
    Ht(a(n)) = i + 5 on the block 9 * 2**(i-1) < n <= 9 * 2**i."""
    if not 11 <= n <= 40:
        raise ValueError("stated pattern covers 11 <= n <= 40 only")
    i = 1
    while 9 * (1 << i) < n:
        i += 1
    return i + 5
