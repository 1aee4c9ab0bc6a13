"""Arithmetic correction operator and the positivity certificate it drives.

The certificate for a box of width N and primitive codimension 2k is an
exact rational assembled in two independent ways: directly, by pairing
hyperplane powers of the primitive class through the correction operator,
and in closed form, as a weighted sum of harmonic numbers.  Both pipelines
live here; tests and the CLI compare them.

The module also carries a small model of projective n-space with one extra
archimedean piece per codimension, used to check the commutator identity
that pins down the correction in the simplest case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chowring import (
    ChowElement,
    Partition2,
    intersection_pairing,
    lefschetz_power,
    primitive_class,
)
from .exactmath import binomial, format_rational, harmonic, harmonic_sum

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SigmaInstance:
    """One certificate instance: box width N and primitive codimension 2k."""

    N: int
    k: int

    def __post_init__(self) -> None:
        if self.N < 1 or self.k < 0 or 2 * self.k > self.N:
            raise ValueError(f"need N >= 1 and 0 <= 2k <= N, got N={self.N}, k={self.k}")

    @property
    def n(self) -> int:
        """Length of the hyperplane string through the primitive class."""
        return self.N - 2 * self.k

    @property
    def T(self) -> int:
        """Shifted parameter N + 2 entering every closed form."""
        return self.N + 2


def correction_op(x: ChowElement) -> ChowElement:
    """Degree-preserving correction operator on the box of width N.

    Classes s(a, b) with a < N are annihilated.  A top-row class s(N, b)
    keeps its harmonic column sum H_0 + ... + H_(N+1) and sheds a staircase
    of harmonic differences:

        (sum_i H_i) s(N, b) - sum_i (H_(N-b+1-i) - H_i) s(N-i, b+i),

    the second sum running over 0 <= i <= (N - b) // 2.
    """
    N = x.N
    column_sum = sum((harmonic(i) for i in range(1, N + 2)), _ZERO)
    acc: dict[Partition2, Fraction] = {}
    for (a, b), c in x.terms.items():
        if a < N:
            continue
        acc[(N, b)] = acc.get((N, b), _ZERO) + c * column_sum
        for i in range((N - b) // 2 + 1):
            w = harmonic(N - b + 1 - i) - harmonic(i)
            key = (N - i, b + i)
            acc[key] = acc.get(key, _ZERO) - c * w
    return ChowElement(N, acc)


def sigma_direct(inst: SigmaInstance) -> Fraction:
    """Certificate assembled term by term through the correction operator."""
    alpha = primitive_class(inst.N, inst.k)
    n = inst.n
    total = _ZERO
    for b in range(n + 1):
        left = lefschetz_power(alpha, n - b)
        right = correction_op(lefschetz_power(alpha, n + b))
        total += intersection_pairing(left, right)
    return total


def top_coefficient(N: int, k: int, b: int) -> int:
    """Coefficient of the top-row class s(N, b) in the raised primitive class.

    Closed form C(N+1-b, 2k+1) * C(N-2k+b, N-2k); summing over b gives
    C(2N-2k+2, N+2).
    """
    return binomial(N + 1 - b, 2 * k + 1) * binomial(N - 2 * k + b, N - 2 * k)


def principal_weight(n: int, T: int) -> int:
    """Constant multiplying the plain harmonic sum in the closed certificate."""
    return binomial(T - 1, n) * binomial(T + n, n)


def correction_weight(n: int, T: int, i: int) -> int:
    """Weight of H_i in the correction part of the closed certificate.

    Single alternating sum in the (n, T) coordinates:

        sum_j (-1)^j C(n+j, n) C(T-1-j, n) C(T-1-n+i-j, i-j) C(T+n, n-i+j).

    Well defined for any 0 <= n <= T - 1, not only the box parities.
    """
    if not (0 <= n <= T - 1 and 1 <= i <= T - 1):
        raise ValueError(f"need 0 <= n <= T-1 and 1 <= i <= T-1, got n={n}, T={T}, i={i}")
    total = 0
    for j in range(max(0, i - n), i + 1):
        total += (
            (-1) ** j
            * binomial(n + j, n)
            * binomial(T - 1 - j, n)
            * binomial(T - 1 - n + i - j, i - j)
            * binomial(T + n, n - i + j)
        )
    return total


def _overlap_sum(N: int, k: int, b: int, i: int) -> int:
    """Alternating overlap of the raised primitive class with the staircase.

    This is sum_j (-1)^j C(N+1-j, N-2k) C(N-2k+j, N-2k) C(N-2k-b, i-j); it is
    antisymmetric under i -> N-b+1-i, which makes the middle term vanish when
    N - b is odd.
    """
    n = N - 2 * k
    total = 0
    for j in range(0, 2 * k + 2):
        total += (
            (-1) ** j
            * binomial(N + 1 - j, n)
            * binomial(n + j, n)
            * binomial(n - b, i - j)
        )
    return total


def correction_weight_box(N: int, k: int, i: int) -> int:
    """Correction weight in box coordinates, as the double sum over (j, b).

    Slower than correction_weight but independent of it; the two must agree
    on every instance.
    """
    n = N - 2 * k
    return sum(
        top_coefficient(N, k, b) * _overlap_sum(N, k, b, i) for b in range(n + 1)
    )


def sigma_closed(inst: SigmaInstance) -> Fraction:
    """Certificate from the closed form: weighted harmonic sums only."""
    n, T = inst.n, inst.T
    a = principal_weight(n, T)
    total = _ZERO
    for i in range(1, T):
        total += (a + correction_weight(n, T, i)) * harmonic(i)
    return total


@dataclass(frozen=True)
class SigmaVerdict:
    """Structured outcome of one certificate computation."""

    N: int
    k: int
    n: int
    T: int
    sigma: Fraction
    positive: bool
    method: str  # "direct", "closed", or "both"
    agree: bool  # pipelines compared equal; vacuously true for one pipeline

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "k": self.k,
            "n": self.n,
            "T": self.T,
            "sigma": format_rational(self.sigma),
            "positive": self.positive,
            "method": self.method,
            "agree": self.agree,
        }


def sigma_verdict(inst: SigmaInstance, method: str = "both") -> SigmaVerdict:
    """Compute the certificate by the requested pipeline(s) and report."""
    if method not in ("direct", "closed", "both"):
        raise ValueError(f"unknown method {method!r}")
    agree = True
    if method == "direct":
        value = sigma_direct(inst)
    elif method == "closed":
        value = sigma_closed(inst)
    else:
        value = sigma_closed(inst)
        agree = sigma_direct(inst) == value
    return SigmaVerdict(
        N=inst.N,
        k=inst.k,
        n=inst.n,
        T=inst.T,
        sigma=value,
        positive=value > 0,
        method=method,
        agree=agree,
    )


# ---------------------------------------------------------------------------
# Projective-space model.
#
# The model for projective n-space keeps, per codimension i, a lifted power
# class (hat basis) and a purely archimedean class sitting one codimension
# higher (form basis).  The single nonclassical constant is the chain
# constant tau = harmonic_sum(n), which closes the raising chain.
# ---------------------------------------------------------------------------


def chain_constant(n: int) -> Fraction:
    """tau_n = harmonic(1) + ... + harmonic(n), the degree of the full chain."""
    return harmonic_sum(n)


@dataclass(frozen=True)
class ProjElement:
    """Model element: hat[i] in codimension i, form[i] in codimension i + 1."""

    n: int
    hat: tuple[Fraction, ...]
    form: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if len(self.hat) != self.n + 1 or len(self.form) != self.n + 1:
            raise ValueError("hat and form must both have length n + 1")
        object.__setattr__(self, "hat", tuple(Fraction(c) for c in self.hat))
        object.__setattr__(self, "form", tuple(Fraction(c) for c in self.form))

    @classmethod
    def basis(cls, n: int, kind: str, i: int) -> "ProjElement":
        if not 0 <= i <= n:
            raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
        hat = [_ZERO] * (n + 1)
        form = [_ZERO] * (n + 1)
        if kind == "hat":
            hat[i] = Fraction(1)
        elif kind == "form":
            form[i] = Fraction(1)
        else:
            raise ValueError(f"unknown kind {kind!r}")
        return cls(n, tuple(hat), tuple(form))

    def __add__(self, other: "ProjElement") -> "ProjElement":
        if self.n != other.n:
            raise ValueError("mixed models")
        return ProjElement(
            self.n,
            tuple(a + b for a, b in zip(self.hat, other.hat)),
            tuple(a + b for a, b in zip(self.form, other.form)),
        )

    def __sub__(self, other: "ProjElement") -> "ProjElement":
        return self + other.scale(-1)

    def scale(self, c) -> "ProjElement":
        c = Fraction(c)
        return ProjElement(
            self.n,
            tuple(c * v for v in self.hat),
            tuple(c * v for v in self.form),
        )


def proj_raise(x: ProjElement, tau: Fraction) -> ProjElement:
    """Hyperplane raising: hat_i -> hat_(i+1), hat_n -> tau form_n,
    form_i -> form_(i+1), form_n -> 0."""
    n = x.n
    hat = [_ZERO] * (n + 1)
    form = [_ZERO] * (n + 1)
    for i, c in enumerate(x.hat):
        if not c:
            continue
        if i < n:
            hat[i + 1] += c
        else:
            form[n] += c * tau
    for i, c in enumerate(x.form):
        if c and i < n:
            form[i + 1] += c
    return ProjElement(n, tuple(hat), tuple(form))


def proj_lower(x: ProjElement, tau: Fraction) -> ProjElement:
    """Adjoint lowering: hat_i -> i (n+2-i) hat_(i-1) and
    form_i -> ((n+1)/tau) hat_i + i (n-i) form_(i-1)."""
    n = x.n
    hat = [_ZERO] * (n + 1)
    form = [_ZERO] * (n + 1)
    for i, c in enumerate(x.hat):
        if c and i >= 1:
            hat[i - 1] += c * i * (n + 2 - i)
    for i, c in enumerate(x.form):
        if not c:
            continue
        hat[i] += c * Fraction(n + 1) / tau
        if i >= 1:
            form[i - 1] += c * i * (n - i)
    return ProjElement(n, tuple(hat), tuple(form))


def proj_commutator_check(n: int) -> bool:
    """Check [lower, raise] = (n + 1 - 2p) id on every model basis element.

    The codimension p is i for hat_i and i + 1 for form_i, so the eigenvalue
    runs from n + 1 down to -(n + 1) along the chain.
    """
    tau = chain_constant(n)
    for kind in ("hat", "form"):
        for i in range(n + 1):
            x = ProjElement.basis(n, kind, i)
            commutator = proj_lower(proj_raise(x, tau), tau) - proj_raise(
                proj_lower(x, tau), tau
            )
            p = i if kind == "hat" else i + 1
            if commutator != x.scale(n + 1 - 2 * p):
                return False
    return True


def proj_sigma(n: int) -> Fraction:
    """The model's certificate: degree of the (n+1)-fold raise of the unit.

    Walking the whole chain turns the unit hat class into tau times the top
    archimedean form, so the value equals the chain constant and is positive.
    """
    tau = chain_constant(n)
    x = ProjElement.basis(n, "hat", 0)
    for _ in range(n + 1):
        x = proj_raise(x, tau)
    return x.form[n]
