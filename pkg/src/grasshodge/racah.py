"""Racah polynomial values, orthogonality, bound scans, and inequality checks.

The central object is the normalized Racah value

    R_n(s, T) = sum_r [(-n)_r (n+1)_r (-s)_r (s+1)_r]
                      / [(1)_r (1+T)_r (1-T)_r r!],

a terminating hypergeometric sum, always evaluated exactly.  Around it sit
the Legendre comparison family, the lattice that links the two, the
alternating inequality driven by a concave sequence, and the scan that
checks |R_n(s, T)| <= 1 across a whole parameter range.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import cos, lcm, pi, sin, sqrt

from .exactmath import (
    ConcaveSequence,
    exp_compare,
    format_rational,
    validate_concave,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)

JOBS_ENV_VAR = "GRASSHODGE_JOBS"


# ---------------------------------------------------------------------------
# Exact evaluation.
#
# For a fixed row (n, T) every denominator (r!)^2 (1+T)_r (1-T)_r divides the
# one at r_max, so a row is carried as integer weights over one common
# denominator.  Scans then compare |numerator| against |denominator| with no
# gcd work at all; single values normalize once at the end.
# ---------------------------------------------------------------------------


def _row_weights(n: int, T: int, r_max: int) -> tuple[list[int], int]:
    """Integer weights w_r and denominator D with
    R_n(s, T) = sum_{r<=r_max} w_r (-s)_r (s+1)_r / D for every s >= r_max.

    Caller guarantees r_max <= T - 1 so no denominator factor vanishes.
    """
    mults = [m * m * (T + m) * (m - T) for m in range(1, r_max + 1)]
    suffix = [1] * (r_max + 1)
    for r in range(r_max - 1, -1, -1):
        suffix[r] = suffix[r + 1] * mults[r]
    weights = []
    a = 1  # (-n)_r (n+1)_r
    for r in range(r_max + 1):
        weights.append(a * suffix[r])
        a *= (r - n) * (n + 1 + r)
    return weights, suffix[0]


def _validate_racah_args(n: int, s: int, T: int) -> None:
    if T < 3:
        raise ValueError(f"need T >= 3, got {T}")
    if n < 0 or s < 0:
        raise ValueError(f"need n, s >= 0, got n={n}, s={s}")
    if min(n, s) >= T:
        raise ValueError(
            f"denominator factor (1-T)_r vanishes: min(n, s) = {min(n, s)} >= T = {T}"
        )


def racah_eval(n: int, s: int, T: int) -> Fraction:
    """Exact value R_n(s, T) of the terminating hypergeometric sum."""
    _validate_racah_args(n, s, T)
    return _racah_cached(n, s, T)


@lru_cache(maxsize=None)
def _racah_cached(n: int, s: int, T: int) -> Fraction:
    r_max = min(n, s)
    weights, den = _row_weights(n, T, r_max)
    num = 0
    p = 1  # (-s)_r (s+1)_r
    for r in range(r_max + 1):
        num += weights[r] * p
        p *= (r - s) * (s + 1 + r)
    return Fraction(num, den)


def _row_numerators(n: int, T: int, s_start: int) -> tuple[list[int], int]:
    """Integer numerators of R_n(s, T) for s = s_start..T-1, one denominator."""
    weights, den = _row_weights(n, T, n)
    nums = []
    for s in range(s_start, T):
        num = 0
        p = 1
        for r in range(min(n, s) + 1):
            num += weights[r] * p
            p *= (r - s) * (s + 1 + r)
        nums.append(num)
    return nums, den


@lru_cache(maxsize=4)
def _full_int_table(T: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """All numerators (row n, column s) and per-row denominators for one T."""
    rows = []
    dens = []
    for n in range(T):
        nums, den = _row_numerators(n, T, 0)
        rows.append(tuple(nums))
        dens.append(den)
    return tuple(rows), tuple(dens)


def racah_top_product(s: int, T: int) -> Fraction:
    """Closed product form of the top row: R_(T-1)(s, T) as a telescoping
    product of (j - T)/(j + T) for j = 1..s."""
    out = _ONE
    for j in range(1, s + 1):
        out *= Fraction(j - T, j + T)
    return out


def orthogonality_check(T: int, n: int, m: int) -> tuple[Fraction, bool]:
    """Weighted inner product of rows n and m against its predicted value.

    sum_s (2s+1) R_n R_m over s = 0..T-1 must equal T^2/(2n+1) when n = m
    and 0 otherwise.  Returns the computed sum and the exact comparison.
    """
    if not (0 <= n <= T - 1 and 0 <= m <= T - 1):
        raise ValueError(f"need 0 <= n, m <= T-1, got n={n}, m={m}, T={T}")
    total = _ZERO
    for s in range(T):
        total += (2 * s + 1) * racah_eval(n, s, T) * racah_eval(m, s, T)
    predicted = Fraction(T * T, 2 * n + 1) if n == m else _ZERO
    return total, total == predicted


def orthogonality_profile(T: int) -> tuple[int, bool]:
    """orthogonality_check over every unordered pair n <= m at one T.

    Runs on the common-denominator integer table, so each pair is a single
    integer identity: sum_s (2s+1) num_n num_m times (2n+1) must equal
    T^2 den_n den_m on the diagonal and 0 off it.  Returns the pair count
    and whether every pair matched.
    """
    if T < 3:
        raise ValueError(f"need T >= 3, got {T}")
    rows, dens = _full_int_table(T)
    weights = [2 * s + 1 for s in range(T)]
    pairs = 0
    ok = True
    T2 = T * T
    for n in range(T):
        for m in range(n, T):
            total = sum(w * a * b for w, a, b in zip(weights, rows[n], rows[m]))
            pairs += 1
            if n == m:
                if total * (2 * n + 1) != T2 * dens[n] * dens[n]:
                    ok = False
            elif total != 0:
                ok = False
    return pairs, ok


# ---------------------------------------------------------------------------
# Legendre comparison family.
# ---------------------------------------------------------------------------


def legendre_values(n_max: int, t) -> list[Fraction]:
    """P_0(t) .. P_(n_max)(t) by the classical three-term recurrence."""
    t = Fraction(t)
    vals = [_ONE]
    if n_max >= 1:
        vals.append(t)
    for m in range(1, n_max):
        vals.append(((2 * m + 1) * t * vals[m] - m * vals[m - 1]) / (m + 1))
    return vals


def legendre_eval(n: int, t) -> Fraction:
    """Exact Legendre value P_n(t) at rational t."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return legendre_values(n, t)[n]


def legendre_coeffs(n: int) -> list[Fraction]:
    """Coefficient list of P_n, constant term first."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    prev = [_ONE]
    if n == 0:
        return prev
    cur = [_ZERO, _ONE]
    for m in range(1, n):
        nxt = [_ZERO] * (m + 2)
        for idx, c in enumerate(cur):
            nxt[idx + 1] += Fraction(2 * m + 1, m + 1) * c
        for idx, c in enumerate(prev):
            nxt[idx] -= Fraction(m, m + 1) * c
        prev, cur = cur, nxt
    return cur


def rescaled_values(n_max: int, T: int, t) -> list[Fraction]:
    """p_0(t) .. p_(n_max)(t), the lattice-rescaled family for parameter T.

    Determined by p_0 = 1, p_1 = t + 1/(2 T^2) and

        p_(m+1) = (2m+1)/(m+1) (t + (2m^2+2m+1)/(2T^2)) p_m
                  - (1 - m^2/T^2)^2 m/(m+1) p_(m-1),

    which degenerates to the Legendre recurrence as T grows.
    """
    if T < 3:
        raise ValueError(f"need T >= 3, got {T}")
    t = Fraction(t)
    T2 = T * T
    vals = [_ONE]
    if n_max >= 1:
        vals.append(t + Fraction(1, 2 * T2))
    for m in range(1, n_max):
        shift = Fraction(2 * m * m + 2 * m + 1, 2 * T2)
        damp = (1 - Fraction(m * m, T2)) ** 2
        nxt = Fraction(2 * m + 1, m + 1) * (t + shift) * vals[m] - damp * Fraction(
            m, m + 1
        ) * vals[m - 1]
        vals.append(nxt)
    return vals


def rescaled_eval(n: int, T: int, t) -> Fraction:
    """Exact value p_n(t) of the rescaled family."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return rescaled_values(n, T, t)[n]


def lattice_node(s: int, T: int) -> Fraction:
    """Node t_s = (2s+1)^2 / (2 T^2) - 1 where the rescaled family meets R."""
    return Fraction((2 * s + 1) ** 2, 2 * T * T) - 1


def rescale_factor(n: int, T: int) -> Fraction:
    """Product of (T^2 - i^2)/T^2 for i = 1..n; with sign (-1)^n it converts
    R_n(s, T) into the rescaled value at the lattice node."""
    out = _ONE
    T2 = T * T
    for i in range(1, n + 1):
        out *= Fraction(T2 - i * i, T2)
    return out


# ---------------------------------------------------------------------------
# Inequalities driven by a concave sequence.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    """Exact comparison record; holds means lhs < rhs strictly."""

    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs

    @property
    def margin(self) -> Fraction:
        return self.rhs - self.lhs

    def __bool__(self) -> bool:
        return self.holds


def _sequence_values(seq, T: int) -> tuple[Fraction, ...]:
    """First T-1 values H_1..H_(T-1) out of a sequence-like argument."""
    values = seq.values if isinstance(seq, ConcaveSequence) else tuple(
        Fraction(v) for v in seq
    )
    if len(values) < T - 1:
        raise ValueError(f"sequence has {len(values)} values, need at least {T - 1}")
    return values[: T - 1]


def alternating_bound(seq, n: int, T: int) -> Inequality:
    """The strict inequality sum_s (-1)^(s+1) R_n(s,T) H_s < sum_s H_s.

    Both sides run over s = 1..T-1 and are returned exactly.  Reference
    implementation over cached single values; alternating_profile is the
    bulk route.
    """
    values = _sequence_values(seq, T)
    lhs = _ZERO
    rhs = _ZERO
    for s in range(1, T):
        h = values[s - 1]
        sign = 1 if s % 2 else -1
        lhs += sign * racah_eval(n, s, T) * h
        rhs += h
    return Inequality(lhs, rhs)


def alternating_profile(seq, T: int) -> list[Inequality]:
    """alternating_bound for every n = 0..T-1 at once, via integer rows.

    The sequence is put over one denominator and each Racah row over its
    own, so the whole profile costs one exact division per n.
    """
    values = _sequence_values(seq, T)
    scale = lcm(*(v.denominator for v in values))
    h = [v.numerator * (scale // v.denominator) for v in values]
    rhs_num = sum(h)
    rows, dens = _full_int_table(T)
    out = []
    for n in range(T):
        acc = 0
        row = rows[n]
        for s in range(1, T):
            if s % 2:
                acc += row[s] * h[s - 1]
            else:
                acc -= row[s] * h[s - 1]
        out.append(
            Inequality(Fraction(acc, dens[n] * scale), Fraction(rhs_num, scale))
        )
    return out


def cauchy_sufficient(seq, n: int, T: int) -> Inequality:
    """Sufficient condition by Cauchy-Schwarz and orthogonality:

        sum_s H_s^2/(2s+1) < (2n+1) (mean of H_0..H_(T-1))^2,

    with H_0 = 0.  When it holds, the alternating bound follows.
    """
    values = _sequence_values(seq, T)
    square_sum = _ZERO
    plain_sum = _ZERO
    for s in range(1, T):
        h = values[s - 1]
        square_sum += h * h / (2 * s + 1)
        plain_sum += h
    mean = plain_sum / T
    return Inequality(square_sum, (2 * n + 1) * mean * mean)


def in_cauchy_range(n: int, T: int) -> bool:
    """True iff log T < n + 1/2, decided exactly as T^2 < e^(2n+1).

    In this range the Cauchy-Schwarz route certifies the alternating bound
    for every concave increasing sequence.
    """
    if T < 3:
        raise ValueError(f"need T >= 3, got {T}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return exp_compare(2 * n + 1, Fraction(T * T)) > 0


def n_below_log(n: int, T: int) -> bool:
    """True iff n < log T, decided exactly as e^n < T."""
    if n < 0 or T < 1:
        raise ValueError(f"need n >= 0 and T >= 1, got n={n}, T={T}")
    return exp_compare(n, Fraction(T)) < 0


@dataclass(frozen=True)
class BranchVerdict:
    """Alternating bound for one (n, T) plus the certifying route labels.

    branches may contain "cauchy" (the sufficient inequality holds),
    "closed-form" (n <= 3 or n = T-1, rows with explicit formulas), and
    "legendre" (T >= 90 and n < log T, the comparison-family regime).  The
    inequality itself is always confirmed by direct exact evaluation.
    """

    T: int
    n: int
    inequality: Inequality
    branches: tuple[str, ...]
    concave: bool

    @property
    def covered(self) -> bool:
        return bool(self.branches)

    def to_json_dict(self) -> dict:
        return {
            "T": self.T,
            "n": self.n,
            "lhs": format_rational(self.inequality.lhs),
            "rhs": format_rational(self.inequality.rhs),
            "holds": self.inequality.holds,
            "branches": list(self.branches),
            "covered": self.covered,
            "concave": self.concave,
        }


def certify_alternating_bound(seq, T: int) -> list[BranchVerdict]:
    """Verdicts with branch labels for every n = 0..T-1.

    For concave input every n is covered by at least one branch; arbitrary
    positive sequences still get exact verdicts but branch coverage is not
    guaranteed and the concave flag marks the run as exploratory.
    """
    values = _sequence_values(seq, T)
    concave = validate_concave(values)
    profile = alternating_profile(values, T)
    square_sum = sum((h * h / (2 * s + 1) for s, h in enumerate(values, 1)), _ZERO)
    mean = sum(values, _ZERO) / T
    mean_sq = mean * mean
    out = []
    for n in range(T):
        branches = []
        if square_sum < (2 * n + 1) * mean_sq:
            branches.append("cauchy")
        if n <= 3 or n == T - 1:
            branches.append("closed-form")
        if T >= 90 and n_below_log(n, T):
            branches.append("legendre")
        out.append(BranchVerdict(T, n, profile[n], tuple(branches), concave))
    return out


# ---------------------------------------------------------------------------
# Bound scan: |R_n(s, T)| <= 1 over a whole T range.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanHit:
    """One (T, n, s) point flagged by the scan."""

    T: int
    n: int
    s: int
    value: Fraction

    def to_json_dict(self, with_value: bool = False) -> dict:
        d = {"T": self.T, "n": self.n, "s": self.s}
        if with_value:
            d["value"] = format_rational(self.value)
        return d


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a bound scan over T_min..T_max."""

    T_min: int
    T_max: int
    violations: tuple[ScanHit, ...]
    equality_cases: tuple[ScanHit, ...]
    rows_checked: int
    elapsed_ms: int

    @property
    def strictness_exceptions(self) -> tuple[ScanHit, ...]:
        """Equality cases away from the trivial edges n = 0 and s = 0."""
        return tuple(h for h in self.equality_cases if h.n != 0 and h.s != 0)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.strictness_exceptions

    def to_json_dict(self, with_elapsed: bool = True) -> dict:
        d = {
            "T_range": [self.T_min, self.T_max],
            "violations": [h.to_json_dict(with_value=True) for h in self.violations],
            "equality_cases": [h.to_json_dict() for h in self.equality_cases],
            "rows_checked": self.rows_checked,
        }
        if with_elapsed:
            d["elapsed_ms"] = self.elapsed_ms
        return d


def _scan_one_T(T: int) -> tuple[int, list, list, int]:
    """Scan the half grid 0 <= n <= s <= T-1 for one T.

    Returns plain tuples (kept picklable for the process pool): violations
    carry the exact value as a numerator/denominator pair.
    """
    violations = []
    equalities = []
    rows = 0
    for n in range(T):
        nums, den = _row_numerators(n, T, n)
        abs_den = abs(den)
        rows += 1
        for offset, num in enumerate(nums):
            abs_num = abs(num)
            if abs_num > abs_den:
                violations.append((T, n, n + offset, num, den))
            elif abs_num == abs_den:
                equalities.append((T, n, n + offset))
    return T, violations, equalities, rows


def default_jobs() -> int:
    """Worker count: the jobs environment variable, else the CPU count."""
    env = os.environ.get(JOBS_ENV_VAR, "")
    if env.strip():
        try:
            jobs = int(env)
        except ValueError as exc:
            raise ValueError(f"{JOBS_ENV_VAR} must be an integer, got {env!r}") from exc
        if jobs >= 1:
            return jobs
    return os.cpu_count() or 1


def bound_scan(T_min: int, T_max: int, jobs: int | None = None) -> ScanReport:
    """Check |R_n(s, T)| <= 1 on the half grid n <= s for every T in range.

    Work is split by T across worker processes (each T is one self-contained
    chunk of rows) and merged back in T order, so the report is identical
    whatever the worker count.
    """
    if not 3 <= T_min <= T_max:
        raise ValueError(f"need 3 <= T_min <= T_max, got {T_min}..{T_max}")
    if jobs is None:
        jobs = default_jobs()
    start = time.monotonic()
    ts = range(T_min, T_max + 1)
    if jobs <= 1 or T_max == T_min:
        results = [_scan_one_T(T) for T in ts]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one_T, ts))
    results.sort(key=lambda item: item[0])
    violations = []
    equalities = []
    rows_checked = 0
    for _, viol, eq, rows in results:
        violations.extend(
            ScanHit(T, n, s, Fraction(num, den)) for (T, n, s, num, den) in viol
        )
        equalities.extend(ScanHit(T, n, s, _ONE) for (T, n, s) in eq)
        rows_checked += rows
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return ScanReport(
        T_min=T_min,
        T_max=T_max,
        violations=tuple(violations),
        equality_cases=tuple(equalities),
        rows_checked=rows_checked,
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# Closeness of the rescaled family to Legendre, and the window checks that
# support the legendre branch.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ApproxReport:
    """Grid deviation of the rescaled family from Legendre on [-1, 1]."""

    n: int
    T: int
    grid_size: int
    max_deviation: Fraction
    bound: Fraction  # (3/2) 4^n / T^2
    within: bool
    tight_regime: bool  # T >= 90 and n < log T
    tight_within: bool | None  # deviation <= 1/10 when in the tight regime


def _approx_reports(T: int, grid_size: int, n_list: list[int]) -> list[ApproxReport]:
    """Shared grid pass: both families are computed once up to max(n_list)."""
    n_hi = max(n_list)
    max_dev = {n: _ZERO for n in n_list}
    for j in range(grid_size + 1):
        t = Fraction(2 * j - grid_size, grid_size)
        ps = rescaled_values(n_hi, T, t)
        qs = legendre_values(n_hi, t)
        for n in n_list:
            dev = abs(ps[n] - qs[n])
            if dev > max_dev[n]:
                max_dev[n] = dev
    out = []
    for n in n_list:
        bound = Fraction(3 * 4**n, 2 * T * T)
        tight = T >= 90 and n_below_log(n, T)
        out.append(
            ApproxReport(
                n=n,
                T=T,
                grid_size=grid_size,
                max_deviation=max_dev[n],
                bound=bound,
                within=max_dev[n] <= bound,
                tight_regime=tight,
                tight_within=(max_dev[n] <= Fraction(1, 10)) if tight else None,
            )
        )
    return out


def check_legendre_approx(n: int, T: int, grid_size: int = 200) -> ApproxReport:
    """Compare p_n and P_n on an equally spaced rational grid of [-1, 1].

    Requires the hypothesis 1 + 2n + 2n^2 < T^2 / 10; under it the deviation
    is bounded by (3/2) 4^n / T^2, and additionally by 1/10 once T >= 90 and
    n < log T.  All comparisons are exact.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if grid_size < 1:
        raise ValueError(f"need grid_size >= 1, got {grid_size}")
    if 10 * (1 + 2 * n + 2 * n * n) >= T * T:
        raise ValueError(
            f"hypothesis 1 + 2n + 2n^2 < T^2/10 fails for n={n}, T={T}"
        )
    return _approx_reports(T, grid_size, [n])[0]


def admissible_degrees(T: int) -> list[int]:
    """All n satisfying the closeness hypothesis 1 + 2n + 2n^2 < T^2/10."""
    out = []
    n = 0
    while 10 * (1 + 2 * n + 2 * n * n) < T * T:
        out.append(n)
        n += 1
    return out


def legendre_approx_profile(T: int, grid_size: int = 200) -> list[ApproxReport]:
    """check_legendre_approx for every admissible n at this T, in one pass."""
    if grid_size < 1:
        raise ValueError(f"need grid_size >= 1, got {grid_size}")
    n_list = admissible_degrees(T)
    if not n_list:
        return []
    return _approx_reports(T, grid_size, n_list)


@dataclass(frozen=True)
class WindowSamples:
    """Sample grids for legendre_window_checks."""

    n_max: int = 40
    t_grid: int = 200  # points across [-9/10, 9/10] is t_grid + 1
    theta_points: int = 10_000
    theta_slack: float = 1e-9
    node_T_values: tuple[int, ...] = tuple(range(10, 61))
    product_samples: tuple[tuple[int, int], ...] = (
        (90, 1),
        (90, 2),
        (90, 3),
        (90, 4),
        (120, 4),
        (200, 5),
        (1000, 6),
    )


@dataclass(frozen=True)
class WindowReport:
    """Results of the three checks supporting the legendre branch."""

    window_max: Fraction  # max |P_n| on the [-9/10, 9/10] grid, n >= 2
    window_ok: bool  # window_max <= 3/4 exactly
    sine_margin: float  # worst slack in the sine-weighted float bound
    sine_ok: bool
    nodes_checked: int
    nodes_ok: bool  # qualifying lattice nodes land inside [-9/10, 9/10]
    product_min: Fraction
    product_ok: bool  # rescale factors stay above 40/41

    @property
    def ok(self) -> bool:
        return self.window_ok and self.sine_ok and self.nodes_ok and self.product_ok


def legendre_window_checks(samples: WindowSamples = WindowSamples()) -> WindowReport:
    """Check the three facts the legendre branch rests on.

    Exactly: |P_n(t)| <= 3/4 on a rational grid of [-9/10, 9/10] for
    2 <= n <= n_max; qualifying lattice nodes (sqrt(5)/10 <= s/T <= 4/5,
    T >= 10) fall inside that window; and the rescale factor stays above
    40/41 for the sampled (T, n) with T >= 90, n < log T.

    In floating point, as a smoke test only: the classical sine-weighted
    bound sqrt(sin theta) |P_n(cos theta)| < sqrt(2/(pi n)) on a uniform
    theta grid, allowing theta_slack of rounding headroom.
    """
    s = samples
    if s.n_max < 2:
        raise ValueError("n_max must be at least 2")

    window_max = _ZERO
    for j in range(s.t_grid + 1):
        # t runs over [-9/10, 9/10] in steps of (9/5) / t_grid
        t = Fraction(-9, 10) + Fraction(9 * j, 5 * s.t_grid)
        vals = legendre_values(s.n_max, t)
        for n in range(2, s.n_max + 1):
            dev = abs(vals[n])
            if dev > window_max:
                window_max = dev
    window_ok = window_max <= Fraction(3, 4)

    sine_margin = float("inf")
    sine_ok = True
    bounds = [0.0] + [sqrt(2.0 / (pi * n)) for n in range(1, s.n_max + 1)]
    for j in range(s.theta_points + 1):
        theta = pi * j / s.theta_points
        weight = sqrt(max(sin(theta), 0.0))
        c = cos(theta)
        prev, cur = 1.0, c
        for n in range(1, s.n_max + 1):
            if n > 1:
                prev, cur = cur, ((2 * n - 1) * c * cur - (n - 1) * prev) / n
            margin = bounds[n] + s.theta_slack - weight * abs(cur)
            if margin < sine_margin:
                sine_margin = margin
            if margin <= 0:
                sine_ok = False

    nodes_checked = 0
    nodes_ok = True
    lo, hi = Fraction(-9, 10), Fraction(9, 10)
    for T in s.node_T_values:
        if T < 10:
            raise ValueError(f"node sample T values must be >= 10, got {T}")
        for t_s in range(T + 1):
            # s/T >= sqrt(5)/10 iff 20 s^2 >= T^2; s/T <= 4/5 iff 5 s <= 4 T
            if 20 * t_s * t_s >= T * T and 5 * t_s <= 4 * T:
                nodes_checked += 1
                node = lattice_node(t_s, T)
                if not lo <= node <= hi:
                    nodes_ok = False

    product_min: Fraction | None = None
    for T, n in s.product_samples:
        if T < 90 or not n_below_log(n, T):
            raise ValueError(f"product sample ({T}, {n}) is outside the regime")
        value = rescale_factor(n, T)
        if product_min is None or value < product_min:
            product_min = value
    if product_min is None:
        raise ValueError("need at least one product sample")
    product_ok = product_min > Fraction(40, 41)

    return WindowReport(
        window_max=window_max,
        window_ok=window_ok,
        sine_margin=sine_margin,
        sine_ok=sine_ok,
        nodes_checked=nodes_checked,
        nodes_ok=nodes_ok,
        product_min=product_min,
        product_ok=product_ok,
    )
