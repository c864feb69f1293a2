"""Base-b digit kernel: digit expansion, digit sums, the step map v + s(v).

Everything here works on plain (arbitrary-precision) Python ints and is the
trusted foundation the search oracles rely on.  All logarithms are computed
by exact integer comparison against powers of b; no floating point anywhere.
"""

__all__ = [
    "check_base",
    "digits_of",
    "digit_sum",
    "step",
    "ceil_log",
    "floor_log",
    "generator_window",
    "complement",
]


def check_base(b: int) -> int:
    if not isinstance(b, int) or b < 2:
        raise ValueError(f"base must be an integer >= 2, got {b!r}")
    return b


def digits_of(v: int, b: int) -> list[int]:
    """Digits of v in base b, least significant first.  digits_of(0) == [0]."""
    check_base(b)
    if v < 0:
        raise ValueError("v must be nonnegative")
    if v == 0:
        return [0]
    out = []
    while v:
        v, r = divmod(v, b)
        out.append(r)
    return out


def digit_sum(v: int, b: int) -> int:
    """Sum of the base-b digits of v."""
    check_base(b)
    if v < 0:
        raise ValueError("v must be nonnegative")
    s = 0
    while v:
        v, r = divmod(v, b)
        s += r
    return s


def step(v: int, b: int) -> int:
    """The map v -> v + digit_sum(v, b)."""
    return v + digit_sum(v, b)


def ceil_log(b: int, u: int) -> int:
    """Smallest t >= 0 with b**t >= u, for u >= 1.  Exact."""
    check_base(b)
    if u < 1:
        raise ValueError("u must be >= 1")
    t = 0
    p = 1
    while p < u:
        p *= b
        t += 1
    return t


def floor_log(b: int, u: int) -> int:
    """Largest m >= 0 with b**m <= u, for u >= 1.  Exact."""
    check_base(b)
    if u < 1:
        raise ValueError("u must be >= 1")
    m = 0
    p = b
    while p <= u:
        p *= b
        m += 1
    return m


def generator_window(u: int, b: int) -> tuple[int, int]:
    """Inclusive range [lo, hi] that contains every v with step(v, b) == u.

    Any such v satisfies v <= u - 1 and s(v) <= (b-1) * ceil(log_b u), which
    gives the lower bound.  Defined for u >= 2 only; callers special-case
    u in {0, 1}.
    """
    check_base(b)
    if u < 2:
        raise ValueError("generator window is defined for u >= 2")
    lo = u - (b - 1) * ceil_log(b, u)
    if lo < 0:
        lo = 0
    return lo, u - 1


def complement(c: int, m: int, v: int, b: int) -> int:
    """Return c*b**m - 1 - v, whose digit sum is (b-1)*m + c - 1 - s(v).

    Requires 0 <= v <= c*b**m - 1 and 1 <= c <= b-1; the digit-sum identity
    is guaranteed under those bounds (the b=2 case is the familiar Hamming
    weight complement).
    """
    check_base(b)
    if not 1 <= c <= b - 1:
        raise ValueError(f"need 1 <= c <= b-1, got c={c}")
    if m < 0:
        raise ValueError("m must be >= 0")
    top = c * b**m - 1
    if not 0 <= v <= top:
        raise ValueError(f"need 0 <= v <= c*b**m - 1 = {top}, got v={v}")
    return top - v
