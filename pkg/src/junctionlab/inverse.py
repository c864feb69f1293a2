"""Inverting v -> v + s(v): generator sets, counts, and search oracles.

The count F(u) = |{v : v + s(v) = u}| satisfies a two-branch recurrence on
the canonical decomposition u = c*(b**m + 1) + k: the generators of u split
into c*b**m + Gen(k) and c*b**m - 1 - Gen((b-1)*m - k - 2).  Both recursive
arguments are at most (b-1)*m, so F of an astronomically placed u reduces to
F on tiny inputs.

`generators_bruteforce` and `smallest_with_count_scan` are deliberately
independent implementations (window scan / vectorized forward counting) used
to cross-validate the recurrence.

The count memo is a plain per-base dict: concurrent use is safe because every
writer stores the same value for a key, so any interleaving is equivalent.
"""

from __future__ import annotations

import os
from typing import Callable, NamedTuple

import numpy as np

from .digits import ceil_log, check_base, digit_sum, floor_log, generator_window, step

__all__ = [
    "CanonicalRep",
    "canonical_rep",
    "canonical_rep_by_descent",
    "generators",
    "count_generators",
    "generators_bruteforce",
    "stream_by_count",
    "smallest_with_count_scan",
    "smallest_with_count_scan_multi",
    "smallest_with_count_structured",
    "StructuredHit",
    "enum_with_count",
    "set_cache_cap",
    "clear_cache",
]


class CanonicalRep(NamedTuple):
    """The unique (m, c, k) with u = c*(b**m + 1) + k, m >= 1, 1 <= c <= b-1,
    and k <= b**m (k <= b**m - b + 1 when c = b-1).  Defined for u > b."""

    m: int
    c: int
    k: int


def canonical_rep(u: int, b: int) -> CanonicalRep:
    check_base(b)
    if u <= b:
        raise ValueError(f"canonical form needs u > b, got u={u}")
    m = floor_log(b, u - 1)
    p = b**m
    c = u // (p + 1)
    k = u - c * (p + 1)
    assert 1 <= c <= b - 1
    assert 0 <= k <= (p - b + 1 if c == b - 1 else p)
    return CanonicalRep(m, c, k)


def canonical_rep_by_descent(u: int, b: int) -> CanonicalRep:
    """Same decomposition found by decrementing the leading digit until the
    remainder can absorb its digit sum.  Exists as an independent check on
    canonical_rep; the two must always agree for u > b."""
    check_base(b)
    if u <= b:
        raise ValueError(f"canonical form needs u > b, got u={u}")
    d = floor_log(b, u)
    c = u // b**d
    while digit_sum(c, b) > u - c * b**d:
        c -= 1
        if c == 0:
            c = b - 1
            d -= 1
    return CanonicalRep(d, c, u - c * b**d - digit_sum(c, b))


# ---------------------------------------------------------------------------
# generator sets and counts


def generators_bruteforce(u: int, b: int) -> list[int]:
    """All v with step(v, b) == u, found by scanning the generator window.

    This is the oracle: it never consults the recurrence.
    """
    check_base(b)
    if u < 0 or u == 1:
        return []
    if u == 0:
        return [0]
    lo, hi = generator_window(u, b)
    return [v for v in range(lo, hi + 1) if step(v, b) == u]


def generators(u: int, b: int) -> list[int]:
    """Sorted generator set of u via the canonical-form recurrence.

    Base cases: Gen(u) is empty for u < 0 and u = 1, Gen(0) = {0}; for
    2 <= u <= b (where the canonical form does not exist) a direct window
    scan is used.
    """
    check_base(b)
    if u < 0 or u == 1:
        return []
    if u == 0:
        return [0]
    if u <= b:
        return generators_bruteforce(u, b)
    m, c, k = canonical_rep(u, b)
    cbm = c * b**m
    out = [cbm - 1 - v for v in generators((b - 1) * m - k - 2, b)]
    out += [cbm + v for v in generators(k, b)]
    out.sort()
    assert all(step(v, b) == u for v in out)
    return out


_F_CACHE: dict[int, dict[int, int]] = {}
_CACHE_CAP: int | None = None
_CACHE_CAP_READ = False


def _cache_cap() -> int | None:
    global _CACHE_CAP, _CACHE_CAP_READ
    if not _CACHE_CAP_READ:
        raw = os.environ.get("JUNCTIONLAB_CACHE_CAP")
        _CACHE_CAP = int(raw) if raw else None
        _CACHE_CAP_READ = True
    return _CACHE_CAP


def set_cache_cap(cap: int | None) -> None:
    """Cap the F(u) memo table size (None = unbounded).  Overrides the
    JUNCTIONLAB_CACHE_CAP environment variable."""
    global _CACHE_CAP, _CACHE_CAP_READ
    _CACHE_CAP = cap
    _CACHE_CAP_READ = True


def clear_cache() -> None:
    _F_CACHE.clear()


def count_generators(u: int, b: int) -> int:
    """F(u) = |Gen(u)| via the count recurrence F(u) = F(k) + F((b-1)m-k-2),
    memoized per base.  The second argument may go negative, contributing 0."""
    check_base(b)
    if u < 0 or u == 1:
        return 0
    if u == 0:
        return 1
    cache = _F_CACHE.setdefault(b, {})
    hit = cache.get(u)
    if hit is not None:
        return hit
    if u <= b:
        f = len(generators_bruteforce(u, b))
    else:
        m, c, k = canonical_rep(u, b)
        f = count_generators(k, b) + count_generators((b - 1) * m - k - 2, b)
    cap = _cache_cap()
    if cap is None or len(cache) < cap:
        cache[u] = f
    return f


def stream_by_count(
    b: int, predicate: Callable[[int], bool], limit: int
) -> list[int]:
    """First `limit` values of u (ascending from 0) whose F(u) satisfies the
    predicate.  predicate(F) -> bool; e.g. self-numbers use F == 0 and
    junction numbers F >= 2."""
    check_base(b)
    if limit < 1:
        raise ValueError("limit must be >= 1")
    out: list[int] = []
    u = 0
    while len(out) < limit:
        if predicate(count_generators(u, b)):
            out.append(u)
        u += 1
    return out


# ---------------------------------------------------------------------------
# exhaustive forward scan (vectorized oracle)


def _preimage_counts(b: int, ceiling: int, chunk: int = 10**7):
    """uint8 array of |{v : v + s(v) = u}| for every u <= ceiling, computed
    by a chunked vectorized forward pass (exact int64 arithmetic)."""
    counts = np.zeros(ceiling + 1, dtype=np.uint8)
    for lo in range(0, ceiling + 1, chunk):
        hi = min(lo + chunk, ceiling + 1)
        v = np.arange(lo, hi, dtype=np.int64)
        s = np.zeros(hi - lo, dtype=np.int64)
        t = v.copy()
        while t.any():
            s += t % b
            t //= b
        f = v + s
        f = f[f <= ceiling]
        if f.size:
            bc = np.bincount(f - lo)  # f >= v >= lo
            counts[lo : lo + bc.size] += bc.astype(np.uint8)
    return counts


def smallest_with_count_scan(
    b: int, n: int, ceiling: int, chunk: int = 10**7
) -> int | None:
    """Smallest u <= ceiling with exactly n generators, by exhaustively
    counting f-preimages of every u up to the ceiling.

    Works chunked so memory stays ~1 byte per candidate; this is the
    brute-force oracle for the table engine and never consults it.
    """
    check_base(b)
    if ceiling < 0:
        return None
    hits = np.flatnonzero(_preimage_counts(b, ceiling, chunk) == n)
    return int(hits[0]) if hits.size else None


def smallest_with_count_scan_multi(
    b: int, ns, ceiling: int, chunk: int = 10**7
) -> dict:
    """smallest_with_count_scan for several target counts in one pass."""
    check_base(b)
    counts = _preimage_counts(b, ceiling, chunk)
    out = {}
    for n in ns:
        hits = np.flatnonzero(counts == n)
        out[n] = int(hits[0]) if hits.size else None
    return out


# ---------------------------------------------------------------------------
# structured search over u = b**m + 1 + k


class StructuredHit(NamedTuple):
    """A structured-search result u = b**m + 1 + k (kept as parts: for large
    m the decimal value is not materializable)."""

    base: int
    m: int
    k: int

    @property
    def value(self) -> int:
        return self.base**self.m + 1 + self.k

    def __str__(self) -> str:
        return f"{self.base}^{self.m}+{1 + self.k}"


def smallest_with_count_structured(
    b: int, n: int, max_m: int, method: str = "auto"
) -> StructuredHit | None:
    """Smallest u of the form b**m + 1 + k (m <= max_m, 0 <= k <= (b-1)m - 2)
    with exactly n generators.

    Every smallest-with-n-generators number has this shape for n >= 2, and
    F(b**m + 1 + k) = F(k) + F((b-1)m - k - 2) touches only arguments up to
    (b-1)m, so the search reaches values far beyond any forward scan.
    Candidates are ordered by (m, k), which is ascending in u.

    For n >= 5 the dense double loop over (m, k) is replaced by an equivalent
    sparse search: any split x + y = n >= 5 has a side >= 3, and the numbers
    with >= 3 generators below the window bound are few and enumerable, so
    only m values near them need inspection.
    """
    check_base(b)
    if n < 2:
        raise ValueError("structured search needs n >= 2")
    if max_m < 1:
        return None
    if method == "auto":
        method = "plain" if n <= 4 else "sparse"
    if method == "plain":
        return _structured_plain(b, n, max_m)
    if method == "sparse":
        if n < 5:
            raise ValueError("sparse structured search requires n >= 5")
        return _structured_sparse(b, n, max_m)
    raise ValueError(f"unknown method {method!r}")


def _structured_plain(b: int, n: int, max_m: int) -> StructuredHit | None:
    if (b - 1) * max_m * max_m > 4 * 10**8:
        raise ValueError("plain enumeration budget exceeded; use the sparse path")
    for m in range(1, max_m + 1):
        top = (b - 1) * m - 2
        for k in range(0, top + 1):
            if count_generators(k, b) + count_generators(top - k, b) == n:
                return StructuredHit(b, m, k)
    return None


def _structured_sparse(b: int, n: int, max_m: int) -> StructuredHit | None:
    cap = (b - 1) * max_m - 2
    if cap < 0:
        return None
    sparse: dict[int, int] = {}
    for x in range(3, n + 1):
        for v in enum_with_count(b, x, cap):
            sparse.setdefault(v, x)

    best: tuple[int, int] | None = None

    def consider(m: int, k: int) -> None:
        nonlocal best
        if 1 <= m <= max_m and (best is None or (m, k) < best):
            best = (m, k)

    for j, x in sparse.items():
        y = n - x
        if y > 2:
            continue  # both sides sparse: covered by the pair pass below
        m0 = -(-(j + 2) // (b - 1))
        # k = j, the other side must have y generators
        m = m0
        while m <= max_m and (best is None or m <= best[0]):
            if count_generators((b - 1) * m - 2 - j, b) == y:
                consider(m, j)
                break
            m += 1
        # the other side = j, k must have y generators
        m = m0
        while m <= max_m and (best is None or m <= best[0]):
            k = (b - 1) * m - 2 - j
            if count_generators(k, b) == y:
                consider(m, k)
                break
            m += 1

    vals = sorted(sparse)
    for i1, j1 in enumerate(vals):
        for j2 in vals[i1:]:
            if sparse[j1] + sparse[j2] != n:
                continue
            tot = j1 + j2 + 2
            if tot % (b - 1) == 0:
                consider(tot // (b - 1), j1)

    return StructuredHit(b, best[0], best[1]) if best is not None else None


def enum_with_count(b: int, x: int, cap: int) -> list[int]:
    """All u <= cap with exactly x >= 3 generators.

    Such u are sparse: each is either a "reduced" c*(b**m+1)+k with
    k <= (b-1)m - 2 whose split counts sum to x, or a lift c*(b**m+1)+s of a
    smaller member s (the k > (b-1)m - 2 branch, where F(u) = F(s)).
    """
    check_base(b)
    if x < 3:
        raise ValueError("enumeration is meaningful for counts >= 3 only")
    found: set[int] = set()

    def eqk_ok(c: int, k: int, pw: int) -> bool:
        return k <= (pw - b + 1 if c == b - 1 else pw)

    m, pw = 1, b
    while pw + 1 <= cap:
        top = (b - 1) * m - 2
        for k in range(0, min(top, pw) + 1):
            if count_generators(k, b) + count_generators(top - k, b) != x:
                continue
            for c in range(1, b):
                u = c * (pw + 1) + k
                if u > cap:
                    break
                if eqk_ok(c, k, pw):
                    found.add(u)
        m, pw = m + 1, pw * b
    work = sorted(found)
    while work:
        s = work.pop()
        m, pw = 1, b
        while pw + 1 + s <= cap:
            if s > (b - 1) * m - 2:  # lift branch only; reduced already done
                for c in range(1, b):
                    u = c * (pw + 1) + s
                    if u > cap:
                        break
                    if eqk_ok(c, s, pw) and u not in found:
                        found.add(u)
                        work.append(u)
            m, pw = m + 1, pw * b
    return sorted(found)
