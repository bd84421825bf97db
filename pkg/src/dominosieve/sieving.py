"""Cyclic sieving on DT(n, n) and orbit realizability of candidate polynomials.

The cyclic group acts on tableaux of shape (n, n) by conjugating the shift
``s -> s + 1 (mod n)`` on subsets through ``phi``. Residues live in
``{1, ..., n}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Union

from dominosieve.bijection import (
    InconsistencyError,
    count_rectangular,
    phi,
    phi_inverse,
)
from dominosieve.combinatorics import (
    NonInteger,
    QPoly,
    binomial,
    divisors,
    eval_at_root_exact,
    eval_qbin_central_closed,
    mobius,
    q_binomial,
    q_factorial,
    q_integer,
)
from dominosieve.tableaux import DominoTableau, enumerate_tableaux, maj_polynomial

#: Largest n for which fixed points are counted by running the action.
EXHAUSTIVE_CAP = 16

Value = Union[int, NonInteger]


def shift_subset(S: Iterable[int], t: int, n: int) -> frozenset[int]:
    return frozenset((s - 1 + t) % n + 1 for s in S)


def act(tableau: DominoTableau, t: int) -> DominoTableau:
    state = phi(tableau)
    return phi_inverse(state.n, shift_subset(state.S, t, state.n))


def _word(n: int, subset: Iterable[int]) -> str:
    zeros = set(subset)
    return "".join("0" if i in zeros else "1" for i in range(1, n + 1))


@dataclass(frozen=True)
class Orbit:
    size: int
    representative: tuple[int, ...]  # lexicographically smallest subset in the orbit
    n: int

    @property
    def word(self) -> str:
        return _word(self.n, self.representative)


@dataclass(frozen=True)
class OrbitReport:
    n: int
    orbits: tuple[Orbit, ...]
    total: int

    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": str(self.total),
            "orbits": [
                {"size": o.size, "representative": o.word, "subset": list(o.representative)}
                for o in self.orbits
            ],
        }


def orbits(n: int) -> OrbitReport:
    """Orbit decomposition of DT(n, n), found by running the action on every tableau."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    tableaux = enumerate_tableaux((n, n))
    seen: set[DominoTableau] = set()
    found = []
    for start in tableaux:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = act(start, 1)
        while nxt != start:
            if nxt in seen:
                raise InconsistencyError("the shift does not act as a permutation")
            cycle.append(nxt)
            seen.add(nxt)
            nxt = act(nxt, 1)
        rep = min(tuple(sorted(phi(t).S)) for t in cycle)
        found.append(Orbit(len(cycle), rep, n))
    found.sort(key=lambda o: o.representative)
    return OrbitReport(n, tuple(found), len(tableaux))


def fixed_points_exhaustive(n: int, k: int) -> int:
    return sum(1 for t in enumerate_tableaux((n, n)) if act(t, k) == t)


def fixed_points_closed(n: int, k: int) -> int:
    """Fixed points of the k-th power: only the orbit sizes dividing gcd(n, k) count."""
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    if k == n:
        return binomial(n, n // 2)
    if n % 2:
        return 0
    g = gcd(n, k)
    return 0 if g % 2 else binomial(g, g // 2)


def fixed_point_count(n: int, k: int, cap: int = EXHAUSTIVE_CAP) -> int:
    """Closed-form count, confirmed by running the action when ``n <= cap``."""
    closed = fixed_points_closed(n, k)
    if n <= cap:
        direct = fixed_points_exhaustive(n, k)
        if direct != closed:
            raise InconsistencyError(f"fixed points of g^{k} on DT({n}^2): {direct} != {closed}")
    return closed


@dataclass(frozen=True)
class CspRow:
    k: int
    fixed: Optional[int]
    poly: Value
    closed: int

    @property
    def match(self) -> bool:
        values = [self.poly, self.closed] + ([self.fixed] if self.fixed is not None else [])
        return all(isinstance(v, int) for v in values) and len(set(values)) == 1


@dataclass(frozen=True)
class CspReport:
    n: int
    rows: tuple[CspRow, ...]
    polynomial: QPoly

    @property
    def verdict(self) -> str:
        return "pass" if all(r.match for r in self.rows) else "fail"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [
                {
                    "k": r.k,
                    "fixed": None if r.fixed is None else str(r.fixed),
                    "poly": str(r.poly),
                    "closed": str(r.closed),
                    "match": r.match,
                }
                for r in self.rows
            ],
            "verdict": self.verdict,
        }


def verify_csp(n: int, cap: int = EXHAUSTIVE_CAP) -> CspReport:
    """Compare, for every k in [1, n], the fixed points of g^k with the maj
    generating function at exp(2 pi i k / n) and with the closed form.

    Up to ``cap`` the fixed points come from the cycle structure of the action
    and the polynomial from enumerating maj; beyond it the fixed column is
    omitted and the Gaussian binomial stands in for the polynomial.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    exhaustive = n <= cap
    if exhaustive:
        sizes = orbits(n).sizes()
        f = maj_polynomial((n, n))
    else:
        f = q_binomial(n, n // 2)
    rows = []
    for k in range(1, n + 1):
        fixed = sum(s for s in sizes if k % s == 0) if exhaustive else None
        rows.append(CspRow(k, fixed, eval_at_root_exact(f, n // gcd(n, k)), eval_qbin_central_closed(n, k)))
    return CspReport(n, tuple(rows), f)


# ---------------------------------------------------------------------------
# realizability


@dataclass(frozen=True)
class RealizabilityReport:
    N: int
    fix: dict[int, Value]
    orbit_counts: dict[int, Fraction] = field(default_factory=dict)
    reason: Optional[str] = None  # NonIntegerValue | NegativeOrbitCount | NonIntegerOrbitCount

    @property
    def realizable(self) -> bool:
        return self.reason is None

    @property
    def verdict(self) -> str:
        return "Realizable" if self.realizable else "Fails"

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "fix": {str(d): str(v) for d, v in self.fix.items()},
            "orbit_counts": {str(m): str(o) for m, o in self.orbit_counts.items()},
            "verdict": self.verdict,
            "reason": self.reason,
        }


def realizability(f: QPoly, N: int) -> RealizabilityReport:
    """Would some action of the cyclic group of order N have fixed-point
    counts f(omega^d)? Invert the counts into orbit counts by Mobius inversion
    and require each to be a nonnegative integer."""
    if N < 1:
        raise ValueError(f"group order must be positive, got {N}")
    divs = divisors(N)
    fix = {d: eval_at_root_exact(f, N // d) for d in divs}
    if any(isinstance(v, NonInteger) for v in fix.values()):
        return RealizabilityReport(N, fix, {}, "NonIntegerValue")
    counts: dict[int, Fraction] = {}
    reason = None
    for m in divs:
        o = Fraction(sum(mobius(m // d) * fix[d] for d in divisors(m)), m)
        counts[m] = o
        if reason is None:
            if o.denominator != 1:
                reason = "NonIntegerOrbitCount"
            elif o < 0:
                reason = "NegativeOrbitCount"
    return RealizabilityReport(N, fix, counts, reason)


# ---------------------------------------------------------------------------
# the rectangular candidate polynomial


def conjecture_polynomial(k: int, n: int) -> QPoly:
    """q-hook-length products of the two quotient rectangles times the
    Gaussian binomial choosing the labels. Raises ``InconsistencyError`` if
    the division leaves a remainder."""
    if k < 1 or n < 1:
        raise ValueError(f"k and n must be positive, got ({k}, {n})")
    big, small = (n + 1) // 2, n // 2
    num = q_factorial(k * big) * q_factorial(k * small)
    den = QPoly([1])
    for i in range(1, k + 1):
        for j in range(i, i + big):
            den = den * q_integer(j)
        for j in range(i, i + small):
            den = den * q_integer(j)
    quot, rem = divmod(num, den)
    if rem:
        raise InconsistencyError(f"hook-product quotient for ({k}, {n}) is not a polynomial")
    return quot * q_binomial(k * n, k * small)


@dataclass(frozen=True)
class ConjectureProbe:
    k: int
    n: int
    f: QPoly
    expected_count: int
    reports: dict[int, RealizabilityReport]

    @property
    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.f.coeffs)

    @property
    def f_at_one(self) -> int:
        return self.f(1)

    @property
    def count_matches(self) -> bool:
        return self.f_at_one == self.expected_count

    @property
    def ok(self) -> bool:
        return self.nonnegative and self.count_matches and all(r.realizable for r in self.reports.values())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "f": list(map(str, self.f.coeffs)),
            "f_at_1": str(self.f_at_one),
            "count_rectangular": str(self.expected_count),
            "nonnegative": self.nonnegative,
            "count_matches": self.count_matches,
            "realizability": [self.reports[N].to_json() for N in sorted(self.reports)],
            "verdict": "pass" if self.ok else "fail",
        }


def conjecture_probe(n: int, k: int, N: Optional[int] = None) -> ConjectureProbe:
    """Check the candidate polynomial for DT(n^(2k)): exact division,
    nonnegative coefficients, value at 1, and realizability at order kn plus
    any extra order ``N``."""
    f = conjecture_polynomial(k, n)
    orders = {k * n}
    if N is not None:
        orders.add(N)
    reports = {order: realizability(f, order) for order in sorted(orders)}
    return ConjectureProbe(k, n, f, count_rectangular(k, n), reports)
