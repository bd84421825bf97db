"""Exact integer and polynomial primitives.

Everything here works over Python integers; no floating point enters a
counting path. Polynomials in ``q`` are dense coefficient tuples wrapped in
:class:`QPoly`. Binary words are plain strings over ``"01"``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, gcd, isqrt
from typing import Iterator, Sequence, Union

Composition = tuple[int, ...]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError(f"catalan index must be nonnegative, got {k}")
    return comb(2 * k, k) // (k + 1)


def fibonacci(n: int) -> int:
    """Fibonacci numbers indexed so that F_0 = F_1 = 1 (tilings of a 2 x n strip)."""
    if n < 0:
        raise ValueError(f"fibonacci index must be nonnegative, got {n}")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def compositions(j: int) -> list[Composition]:
    """All compositions of ``j`` in lexicographic order of their parts.

    ``compositions(0)`` is empty; callers that need the empty composition
    add it themselves.
    """
    if j < 0:
        raise ValueError(f"cannot compose a negative integer: {j}")
    if j == 0:
        return []

    def rec(rest: int) -> Iterator[Composition]:
        for first in range(1, rest + 1):
            if first == rest:
                yield (first,)
            else:
                for tail in rec(rest - first):
                    yield (first,) + tail

    return list(rec(j))


# ---------------------------------------------------------------------------
# polynomials in q


class QPoly:
    """Integer polynomial in ``q``; ``coeffs[i]`` is the coefficient of ``q**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other: Union["QPoly", int]) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = QPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, divisor: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division over Z.

        Raises ``ValueError`` if a quotient coefficient would not be an
        integer (cannot happen for monic divisors).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dl, dd = dc[-1], len(dc) - 1
        if len(rem) - 1 < dd:
            return QPoly(), QPoly(rem)
        quot = [0] * (len(rem) - dd)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            top = rem[shift + dd]
            if top == 0:
                continue
            c, r = divmod(top, dl)
            if r:
                raise ValueError("division is not exact over the integers")
            quot[shift] = c
            for i, y in enumerate(dc):
                rem[shift + i] -= c * y
        return QPoly(quot), QPoly(rem)

    def __mod__(self, divisor: "QPoly") -> "QPoly":
        return divmod(self, divisor)[1]

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        quot, rem = divmod(self, divisor)
        if rem:
            raise ValueError(f"{divisor!r} does not divide {self!r}")
        return quot

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def q_integer(m: int) -> QPoly:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise ValueError(f"q-integer of a negative number: {m}")
    return QPoly([1] * m)


def q_factorial(m: int) -> QPoly:
    out = QPoly([1])
    for i in range(1, m + 1):
        out = out * q_integer(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient, built by the q-Pascal recurrence."""
    if n < 0 or k < 0:
        raise ValueError(f"q_binomial needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        raise ValueError(f"q_binomial({n}, {k}): k exceeds n")
    row = [QPoly([1])]
    for m in range(1, n + 1):
        nxt = [QPoly([1])]
        for j in range(1, m):
            nxt.append(row[j - 1] + QPoly.monomial(j) * row[j])
        nxt.append(QPoly([1]))
        row = nxt
    return row[k]


# ---------------------------------------------------------------------------
# arithmetic functions


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors of a nonpositive integer: {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius of a nonpositive integer: {n}")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPoly:
    """The d-th cyclotomic polynomial, from prod_{e|d} (q^e - 1)^mu(d/e)."""
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    num, den = QPoly([1]), QPoly([1])
    for e in divisors(d):
        mu = mobius(d // e)
        factor = QPoly.monomial(e) - 1
        if mu == 1:
            num = num * factor
        elif mu == -1:
            den = den * factor
    return num.exact_div(den)


@dataclass(frozen=True)
class NonInteger:
    """Value at a root of unity that is not a rational integer.

    ``residue`` is the reduction of the polynomial modulo the cyclotomic
    polynomial, i.e. the value written in the power basis of the root.
    """

    order: int
    residue: QPoly

    def __str__(self) -> str:
        return "non-integer"


def eval_at_root_exact(f: QPoly, d: int) -> Union[int, NonInteger]:
    """Evaluate ``f`` at a primitive d-th root of unity, exactly.

    The remainder of ``f`` modulo the d-th cyclotomic polynomial is the unique
    representative of the value in the power basis; the value is a rational
    integer exactly when that remainder is constant.
    """
    if d < 1:
        raise ValueError(f"root order must be positive, got {d}")
    rem = f % cyclotomic(d)
    if rem.degree <= 0:
        return rem.coeffs[0] if rem.coeffs else 0
    return NonInteger(d, rem)


def eval_at_root_numeric(f: QPoly, d: int) -> complex:
    """Floating-point value at exp(2*pi*i/d); a cross-check only."""
    return f(cmath.exp(2j * cmath.pi / d))


def eval_qbin_central_closed(n: int, k: int) -> int:
    """Value of [n choose floor(n/2)]_q at exp(2*pi*i*k/n) by the q-Lucas reduction."""
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    d = n // gcd(n, k)
    half = n // 2
    if half % d:
        return 0
    return comb(n // d, half // d)


# ---------------------------------------------------------------------------
# binary words


def _check_word(w: str) -> None:
    if any(ch not in "01" for ch in w):
        raise ValueError(f"not a binary word: {w!r}")


def binary_words(n: int, k: int) -> list[str]:
    """All words of length n with exactly k zeros, in lexicographic order."""
    if not 0 <= k <= n:
        return []
    words = []
    for zeros in combinations(range(n), k):
        letters = ["1"] * n
        for i in zeros:
            letters[i] = "0"
        words.append("".join(letters))
    return words


def word_descents(w: str) -> frozenset[int]:
    """1-indexed positions i with a 1 at i followed by a 0 at i + 1."""
    _check_word(w)
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] == "1" and w[i + 1] == "0")


def word_maj(w: str) -> int:
    return sum(word_descents(w))


def necklace_canonical(w: str) -> str:
    _check_word(w)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def lyndon_words(n: int, k: int) -> list[str]:
    """Binary Lyndon words of length n with k zeros, sorted.

    Uses the Fredricksen-Kessler-Maiorana successor rule, which emits Lyndon
    words of length <= n in lexicographic order.
    """
    if n < 1:
        raise ValueError(f"Lyndon word length must be positive, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"zero count {k} out of range for length {n}")
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n and w.count(0) == k:
            out.append("".join(map(str, w)))
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == 1:
            w.pop()
    return out
