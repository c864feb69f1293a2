"""Exact arithmetic on sparse-radix integers with tower-of-exponentials exponents.

A TowerInt stores a nonnegative integer as

    (1/gamma) * (alpha_1 * b**d_1 + alpha_2 * b**d_2 + ... + alpha_k * b**d_k)

where the exponents d_i are themselves TowerInts.  This makes numbers like
10**((10**13+116)/9) + 102 first-class values: they can be added, scaled,
compared and classified mod b-1 exactly, without ever materializing their
digits.

Canonical form: 1 <= alpha_i <= b-1, exponents strictly decreasing, gamma a
divisor of b-1 with no factor common to all coefficients.  The empty term
list is the value 0 (only with gamma == 1).  Representations are still not
unique across different gammas (e.g. (1/4)*(5**1 + 3) and 2 both denote 2 in
base 5); `compare` treats such pairs as equal, and normalization collapses a
fractional form to a plain one whenever the numerator is small enough to
materialize cheaply.

Supported operations are deliberately narrow: addition, scaling by a positive
integer, exact division by divisors of b-1, comparison, residues mod b-1,
tower height.  There is no subtraction and no product of two tower values;
nothing in this library needs them.
"""

from __future__ import annotations

from functools import cmp_to_key
from math import gcd, lcm

from .digits import check_base, digits_of

__all__ = [
    "TowerInt",
    "TowerParseError",
    "ResidueUndefinedError",
    "OVERFLOW",
    "zero",
    "one",
    "from_natural",
    "power_of_base",
    "add",
    "scale_by_natural",
    "divide_exact",
    "compare",
    "to_natural",
    "residue_mod_bm1",
    "height_of",
    "render",
    "parse",
]

# Values below this materialize as plain ints during normalization and
# rendering; everything above stays symbolic.  Small enough that exponents
# like (10**13+116)/9 keep their fractional sparse form.
SMALL_VALUE_LIMIT = 10**7

# Default digit budget for to_natural: refuse to build plain ints with more
# than this many base-b digits.
DEFAULT_DIGIT_BUDGET = 10**6


class TowerParseError(ValueError):
    """Raised on malformed tower-grammar input; carries the offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ResidueUndefinedError(ValueError):
    """residue_mod_bm1 on a reduced fractional form, where the residue is
    not determined by the coefficient sum."""


class _Overflow:
    __slots__ = ()

    def __repr__(self):
        return "overflow"


OVERFLOW = _Overflow()


class TowerInt:
    """Immutable exact nonnegative integer in sparse radix form."""

    __slots__ = ("base", "gamma", "terms", "_scaled")

    def __init__(self, base: int, gamma: int, terms: tuple):
        # Internal: use the module factories; invariants are enforced there.
        self.base = base
        self.gamma = gamma
        self.terms = terms
        self._scaled: dict | None = None  # mult -> canonical mult*numerator terms

    # -- comparisons -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TowerInt):
            return other
        if isinstance(other, int) and other >= 0:
            return from_natural(other, self.base)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else compare(self, o) == 0

    def __lt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else compare(self, o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else compare(self, o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else compare(self, o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else compare(self, o) >= 0

    __hash__ = None  # equal values may differ structurally; don't use as keys

    # -- arithmetic sugar ------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else add(self, o)

    __radd__ = __add__

    def __mul__(self, t):
        if isinstance(t, int):
            return scale_by_natural(self, t)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"TowerInt({render(self)}, base={self.base})"

    def is_zero(self) -> bool:
        return not self.terms


# ---------------------------------------------------------------------------
# construction and normalization


def _cmp_terms(tx: tuple, ty: tuple) -> int:
    """Lexicographic comparison of canonical gamma-free term tuples."""
    for (ax, dx), (ay, dy) in zip(tx, ty):
        c = 0 if dx is dy else compare(dx, dy)
        if c:
            return c
        if ax != ay:
            return 1 if ax > ay else -1
    if len(tx) != len(ty):
        return 1 if len(tx) > len(ty) else -1
    return 0


def _scaled_terms(x: TowerInt, mult: int) -> tuple:
    """Canonical term tuple of mult * numerator(x), cached per object
    (compare hits the same scalings over and over on shared exponents)."""
    if mult == 1:
        return x.terms
    if x._scaled is None:
        x._scaled = {}
    hit = x._scaled.get(mult)
    if hit is None:
        hit = _make(x.base, 1, [(a * mult, d) for a, d in x.terms], reduce=False).terms
        x._scaled[mult] = hit
    return hit


def compare(x: TowerInt, y: TowerInt) -> int:
    """Total order on represented values: -1, 0 or 1.

    With equal denominators the canonical term lists compare
    lexicographically (exponents first, then coefficients); otherwise both
    sides are scaled to the lcm of the denominators first.
    """
    if x is y:
        return 0
    if x.base != y.base:
        raise ValueError(f"cannot compare TowerInts in bases {x.base} and {y.base}")
    if not x.terms:
        return 0 if not y.terms else -1
    if not y.terms:
        return 1
    if x.gamma == y.gamma:
        return _cmp_terms(x.terms, y.terms)
    m = lcm(x.gamma, y.gamma)
    return _cmp_terms(_scaled_terms(x, m // x.gamma), _scaled_terms(y, m // y.gamma))


def _merge(base: int, terms: list) -> list:
    """Sort term list by decreasing exponent and combine equal exponents."""
    terms = [t for t in terms if t[0]]
    terms.sort(key=cmp_to_key(lambda s, t: compare(s[1], t[1])), reverse=True)
    out = []
    for a, d in terms:
        if out and compare(out[-1][1], d) == 0:
            out[-1][0] += a
        else:
            out.append([a, d])
    return out


# Exponent-increment cache: carrying beta*b**d repeatedly bumps the same
# shared exponent objects by tiny offsets; computing each bump once turns an
# exponential carry cascade down the tower into linear work.  Keys hold a
# reference to the operand so its id stays valid.
_SUCC_CACHE: dict = {}


def _bump(d: TowerInt, j: int) -> TowerInt:
    key = (id(d), j)
    hit = _SUCC_CACHE.get(key)
    if hit is None:
        hit = add(d, from_natural(j, d.base))
        _SUCC_CACHE[key] = hit
        _SUCC_CACHE.setdefault(("pin", id(d)), d)
    return hit


def _carry(base: int, terms: list) -> list:
    """Reduce coefficients into [1, base-1] by positional carrying.

    beta * b**d with beta >= b becomes sum of digit_j(beta) * b**(d + j); the
    exponent increments are TowerInt additions themselves.  Works ascending
    in one pass: carries land on not-yet-processed slots, so no re-sorting.
    """
    lst = [list(t) for t in reversed(terms)]  # ascending exponents, unique
    i = 0
    while i < len(lst):
        a, d = lst[i]
        if a < base:
            i += 1
            continue
        digs = digits_of(a, base)
        lst[i][0] = digs[0]
        for j in range(1, len(digs)):
            if not digs[j]:
                continue
            dj = _bump(d, j)
            pos = i + 1
            while pos < len(lst):
                c = 0 if lst[pos][1] is dj else compare(lst[pos][1], dj)
                if c == 0:
                    lst[pos][0] += digs[j]
                    break
                if c > 0:
                    lst.insert(pos, [digs[j], dj])
                    break
                pos += 1
            else:
                lst.append([digs[j], dj])
        if lst[i][0] == 0:
            del lst[i]
        else:
            i += 1
    return [t for t in reversed(lst) if t[0]]


def _as_plain_int(base: int, gamma: int, terms, limit: int):
    """Exact value as a plain int if it is < limit, else None."""
    total = 0
    bound = limit * gamma
    for a, d in terms:
        e = _as_plain_int(base, d.gamma, d.terms, 64)
        if e is None:
            return None
        total += a * base**e
        if total >= bound:
            return None
    if total % gamma:
        raise ValueError("non-integral tower value (internal invariant broken)")
    v = total // gamma
    return v if v < limit else None


def _make(base: int, gamma: int, terms, reduce: bool = True) -> TowerInt:
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    if (base - 1) % gamma:
        raise ValueError(f"gamma={gamma} must divide b-1={base - 1}")
    merged = _carry(base, _merge(base, list(terms)))
    if not merged:
        return TowerInt(base, 1, ())
    if gamma > 1:
        g = gcd(gamma, *(a for a, _ in merged))
        if g > 1:
            gamma //= g
            merged = _carry(base, [[a // g, d] for a, d in merged])
        if gamma > 1:
            if sum(a for a, _ in merged) % gamma:
                raise ValueError(
                    f"(1/{gamma})*(...) does not represent an integer in base {base}"
                )
            if reduce:
                v = _as_plain_int(base, gamma, merged, SMALL_VALUE_LIMIT)
                if v is not None:
                    return from_natural(v, base)
    return TowerInt(base, gamma, tuple((a, d) for a, d in merged))


_NAT_CACHE: dict = {}


def zero(base: int) -> TowerInt:
    return from_natural(0, base)


def one(base: int) -> TowerInt:
    return from_natural(1, base)


def from_natural(v: int, base: int) -> TowerInt:
    """TowerInt (gamma = 1) equal to the plain nonnegative integer v."""
    check_base(base)
    if v < 0:
        raise ValueError("v must be nonnegative")
    key = (base, v)
    hit = _NAT_CACHE.get(key)
    if hit is not None:
        return hit
    terms = []
    for i, dig in enumerate(digits_of(v, base)):
        if dig:
            terms.append((dig, from_natural(i, base)))
    terms.reverse()
    out = TowerInt(base, 1, tuple(terms))
    if v <= 4096:
        _NAT_CACHE[key] = out
    return out


def power_of_base(e: TowerInt) -> TowerInt:
    """b**e as a single-term TowerInt (base taken from the exponent)."""
    return TowerInt(e.base, 1, ((1, e),))


def add(x: TowerInt, y: TowerInt) -> TowerInt:
    """Exact sum.  Denominators are cleared to their lcm, terms with equal
    exponents combined, and base-b carries applied."""
    if x.base != y.base:
        raise ValueError("cannot add TowerInts with different bases")
    if x.is_zero():
        return y
    if y.is_zero():
        return x
    m = lcm(x.gamma, y.gamma)
    terms = [(a * (m // x.gamma), d) for a, d in x.terms]
    terms += [(a * (m // y.gamma), d) for a, d in y.terms]
    return _make(x.base, m, terms)


def scale_by_natural(x: TowerInt, t: int) -> TowerInt:
    """t * x for a plain integer t >= 1."""
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"scale factor must be an integer >= 1, got {t!r}")
    if t == 1:
        return x
    return _make(x.base, x.gamma, [(a * t, d) for a, d in x.terms])


def divide_exact(x: TowerInt, q: int) -> TowerInt:
    """x / q for q dividing both b-1 and the value of x.

    Non-divisibility is an error, never a truncation: it would mean the
    calling recurrence produced a non-integral quantity.
    """
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"divisor must be an integer >= 1, got {q!r}")
    if q == 1:
        return x
    b = x.base
    if (b - 1) % q:
        raise ValueError(f"divisor {q} does not divide b-1 = {b - 1}")
    if x.gamma == 1 and sum(a for a, _ in x.terms) % q:
        raise ValueError(f"value is not divisible by {q} (residue check failed)")
    return _make(b, x.gamma * q, x.terms)


def to_natural(x: TowerInt, digit_budget: int | None = None):
    """Exact plain int when x has at most digit_budget base-b digits,
    otherwise the OVERFLOW marker (a value, not an error)."""
    if digit_budget is None:
        digit_budget = DEFAULT_DIGIT_BUDGET
    if digit_budget < 1:
        raise ValueError("digit_budget must be >= 1")
    if x.is_zero():
        return 0
    if compare(x, power_of_base(from_natural(digit_budget, x.base))) >= 0:
        return OVERFLOW
    total = 0
    for a, d in x.terms:
        e = to_natural(d, digit_budget)
        assert e is not OVERFLOW  # d <= log_b(x) < digit_budget
        total += a * x.base**e
    assert total % x.gamma == 0
    return total // x.gamma


def residue_mod_bm1(x: TowerInt) -> int:
    """Value of x mod (b-1), using b**d == 1 (mod b-1).

    Only defined when the reduced form has gamma == 1 (always the case for
    the K-table values this classifies); a surviving gamma > 1 leaves the
    residue undetermined by the coefficient sum and raises.
    """
    b = x.base
    if b == 2:
        return 0
    s = sum(a for a, _ in x.terms)
    if x.gamma == 1:
        return s % (b - 1)
    raise ResidueUndefinedError(
        f"residue mod {b - 1} undefined for reduced denominator {x.gamma}"
    )


def height_of(x: TowerInt) -> int:
    """Smallest h >= 1 with x <= b^^(h-1), where b^^0 = 1 and
    b^^(j+1) = b**(b^^j).  Rejects x = 0."""
    if x.is_zero():
        raise ValueError("height is defined for x >= 1 only")
    t = one(x.base)
    h = 1
    while compare(x, t) > 0:
        t = power_of_base(t)
        h += 1
    return h


# ---------------------------------------------------------------------------
# rendering and parsing


def _small_exponent(d: TowerInt):
    return _as_plain_int(d.base, d.gamma, d.terms, 64)


def render(x: TowerInt) -> str:
    """Canonical whitespace-free string form.

    Terms appear in strictly decreasing exponent order; a maximal suffix of
    small terms collapses to one decimal integer, and exponents print as
    decimal when their value is below SMALL_VALUE_LIMIT, otherwise as a
    braced tower expression.  A denominator renders as the prefix
    "(1/gamma)*( ... )".
    """
    if x.is_zero():
        return "0"
    body = _render_sum(x)
    if x.gamma == 1:
        return body
    return f"(1/{x.gamma})*({body})"


def _render_sum(x: TowerInt) -> str:
    terms = x.terms
    split = len(terms)
    tail = 0
    for idx in range(len(terms) - 1, -1, -1):
        a, d = terms[idx]
        e = _small_exponent(d)
        if e is None:
            break
        try:
            cand = tail + a * x.base**e
        except OverflowError:  # pragma: no cover
            break
        if cand >= SMALL_VALUE_LIMIT:
            break
        tail = cand
        split = idx
    parts = []
    for a, d in terms[:split]:
        e = _as_plain_int(d.base, d.gamma, d.terms, SMALL_VALUE_LIMIT)
        exp_str = str(e) if e is not None else render(d)
        pow_str = f"{x.base}^{{{exp_str}}}"
        parts.append(pow_str if a == 1 else f"{a}*{pow_str}")
    if tail or not parts:
        parts.append(str(tail))
    return "+".join(parts)


class _Parser:
    def __init__(self, text: str, base: int):
        self.text = text
        self.base = base
        self.pos = 0

    def error(self, msg: str):
        raise TowerParseError(msg, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if not self.text.startswith(ch, self.pos):
            self.error(f"expected {ch!r}")
        self.pos += len(ch)

    def natural(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a digit")
        return int(self.text[start : self.pos])

    def tower(self) -> TowerInt:
        gamma = 1
        if self.peek() == "(":
            gamma = self.frac()
        if gamma > 1 and self.peek() == "(":
            self.take("(")
            value = self.sum_()
            self.take(")")
        else:
            value = self.sum_()
        if gamma == 1:
            return value
        if (self.base - 1) % gamma:
            self.error(f"denominator {gamma} does not divide b-1 = {self.base - 1}")
        try:
            return _make(self.base, gamma, value.terms)
        except ValueError as exc:
            self.error(str(exc))

    def frac(self) -> int:
        self.take("(")
        self.take("1")
        self.take("/")
        gamma = self.natural()
        self.take(")")
        self.take("*")
        if gamma < 1:
            self.error("denominator must be >= 1")
        return gamma

    def sum_(self) -> TowerInt:
        acc = self.term()
        while self.peek() == "+":
            self.take("+")
            acc = add(acc, self.term())
        return acc

    def term(self) -> TowerInt:
        n = self.natural()
        if self.peek() == "^":
            if n != self.base:
                self.error(f"power base {n} != working base {self.base}")
            return power_of_base(self.exponent())
        if self.peek() == "*":
            self.take("*")
            m = self.natural()
            if m != self.base:
                self.error(f"power base {m} != working base {self.base}")
            if self.peek() != "^":
                self.error("expected '^' after coefficient*base")
            p = power_of_base(self.exponent())
            if n < 1:
                self.error("coefficient must be >= 1")
            return scale_by_natural(p, n)
        return from_natural(n, self.base)

    def exponent(self) -> TowerInt:
        self.take("^")
        if self.peek() == "{":
            self.take("{")
            e = self.tower()
            self.take("}")
            return e
        return from_natural(self.natural(), self.base)


def parse(s: str, base: int) -> TowerInt:
    """Parse the canonical grammar.  parse(render(x)) compares equal to x."""
    check_base(base)
    p = _Parser(s, base)
    out = p.tower()
    if p.pos != len(s):
        p.error("trailing input")
    return out
