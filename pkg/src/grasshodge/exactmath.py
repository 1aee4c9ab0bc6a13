"""Exact rational arithmetic helpers shared by every other module.

Everything here works over Python's Fraction type.  Nothing in this module
touches floating point; callers that want decimal output go through
decimal_approx, which rounds an exact rational.
"""

from __future__ import annotations

import math
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "Rational",
    "binomial",
    "pochhammer",
    "harmonic",
    "harmonic_sum",
    "validate_concave",
    "ConcaveSequence",
    "random_concave",
    "format_rational",
    "parse_rational",
    "decimal_approx",
    "exp_compare",
]

Rational = Fraction

_ZERO = Fraction(0)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with value 0 for k < 0 or k > n.

    The upper index must be nonnegative; sums in other modules rely on the
    out-of-range convention instead of clamping their own loop bounds.
    """
    if n < 0:
        raise ValueError(f"binomial needs a nonnegative upper index, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(a, r: int):
    """Rising factorial a (a+1) ... (a+r-1); empty product 1 when r = 0."""
    if r < 0:
        raise ValueError(f"pochhammer needs r >= 0, got {r}")
    out = 1
    for i in range(r):
        out *= a + i
    return out


# Harmonic numbers are requested constantly and grow one term at a time, so
# the cache is a prefix list extended under a lock (each worker process gets
# its own copy).
_harmonic_values = [_ZERO]
_harmonic_lock = threading.Lock()


def harmonic(k: int) -> Fraction:
    """k-th harmonic number 1 + 1/2 + ... + 1/k, with harmonic(0) = 0."""
    if k < 0:
        raise ValueError(f"harmonic needs k >= 0, got {k}")
    if k >= len(_harmonic_values):
        with _harmonic_lock:
            while len(_harmonic_values) <= k:
                j = len(_harmonic_values)
                _harmonic_values.append(_harmonic_values[-1] + Fraction(1, j))
    return _harmonic_values[k]


def harmonic_sum(n: int) -> Fraction:
    """Sum of the first n harmonic numbers, harmonic(1) + ... + harmonic(n)."""
    if n < 0:
        raise ValueError(f"harmonic_sum needs n >= 0, got {n}")
    harmonic(n)
    return sum(_harmonic_values[1 : n + 1], _ZERO)


def validate_concave(values: Sequence[Fraction]) -> bool:
    """True when values extend to a strictly increasing concave sequence.

    The list holds H_1, H_2, ... with H_0 = 0 implied, so the increments
    H_s - H_(s-1) must all be positive and nonincreasing.
    """
    prev = _ZERO
    prev_inc: Fraction | None = None
    for v in values:
        inc = v - prev
        if inc <= 0:
            return False
        if prev_inc is not None and inc > prev_inc:
            return False
        prev, prev_inc = v, inc
    return True


@dataclass(frozen=True)
class ConcaveSequence:
    """Strictly increasing concave positive values H_1..H_m (H_0 = 0 implied).

    seed records the RNG seed when the sequence was generated randomly, so a
    failing run can be replayed.
    """

    values: tuple[Fraction, ...]
    seed: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if not validate_concave(self.values):
            raise ValueError("values are not strictly increasing and concave")

    def __len__(self) -> int:
        return len(self.values)

    def h(self, s: int) -> Fraction:
        """H_s with the H_0 = 0 convention."""
        if s == 0:
            return _ZERO
        return self.values[s - 1]

    @classmethod
    def harmonic(cls, m: int) -> "ConcaveSequence":
        return cls(tuple(harmonic(k) for k in range(1, m + 1)))


def random_concave(m: int, seed: int) -> ConcaveSequence:
    """Random concave increasing sequence of length m, reproducible by seed.

    Draw m positive rational increments, sort them nonincreasing and take
    prefix sums; concavity is then automatic.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    rng = random.Random(seed)
    incs = sorted(
        (Fraction(rng.randint(1, 9999), rng.randint(1, 9999)) for _ in range(m)),
        reverse=True,
    )
    values = []
    total = _ZERO
    for inc in incs:
        total += inc
        values.append(total)
    return ConcaveSequence(tuple(values), seed=seed)


def format_rational(q) -> str:
    """Canonical text form: "p/q" in lowest terms, or "p" when q = 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", a plain integer, or a finite decimal, all read exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def decimal_approx(q, places: int = 12) -> str:
    """Decimal rendering of an exact rational, rounded to `places` digits.

    Rounding is round-half-even on the exact value, so output is
    deterministic and accurate to 10**-places.
    """
    q = Fraction(q)
    scaled = round(q * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{str(frac).zfill(places)}"


def exp_compare(m: int, x) -> int:
    """Sign of e**m - x for integer m >= 0 and rational x, decided exactly.

    Partial sums of the exponential series give certified lower bounds, and
    the geometric tail estimate term * m / (j + 1 - m) gives certified upper
    bounds; the loop refines until the two sides separate x.  For m >= 1 the
    value e**m is irrational, so the comparison always terminates; m = 0 is
    the one rational case and is answered directly.
    """
    if m < 0:
        raise ValueError(f"exp_compare needs m >= 0, got {m}")
    x = Fraction(x)
    if x <= 0:
        return 1
    if m == 0:
        return (x < 1) - (x > 1)
    total = Fraction(1)
    term = Fraction(1)
    j = 0
    while True:
        j += 1
        term *= Fraction(m, j)
        total += term
        if total > x:
            return 1
        if j + 1 > m and total + term * Fraction(m, j + 1 - m) < x:
            return -1
