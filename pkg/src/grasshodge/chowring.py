"""Schubert calculus for the Grassmannian of lines in projective (N+1)-space.

Classes are indexed by two-row partitions (a, b) with N >= a >= b >= 0, the
partitions fitting in a 2 x N box.  The variety has dimension 2N, codimension
p classes are the partitions of weight p, and everything is carried as a
sparse map from partition to exact rational coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactmath import binomial, format_rational, parse_rational

Partition2 = tuple[int, int]

_ZERO = Fraction(0)


def valid_partition(N: int, a: int, b: int) -> bool:
    return N >= a >= b >= 0


def _insert(acc: dict[Partition2, Fraction], N: int, a: int, b: int, c: Fraction) -> None:
    # Out-of-box Schubert symbols are identically zero, so they are dropped
    # here rather than policed by every caller.
    if not c or not valid_partition(N, a, b):
        return
    new = acc.get((a, b), _ZERO) + c
    if new:
        acc[(a, b)] = new
    else:
        del acc[(a, b)]


@dataclass(frozen=True)
class ChowElement:
    """Sparse rational combination of Schubert classes in a fixed 2 x N box."""

    N: int
    terms: dict[Partition2, Fraction]

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError(f"box width must be positive, got {self.N}")
        clean: dict[Partition2, Fraction] = {}
        for (a, b), c in self.terms.items():
            if not valid_partition(self.N, a, b):
                raise ValueError(f"({a},{b}) does not fit in the 2 x {self.N} box")
            c = Fraction(c)
            if c:
                clean[(a, b)] = c
        object.__setattr__(self, "terms", clean)

    def coeff(self, a: int, b: int) -> Fraction:
        return self.terms.get((a, b), _ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Partition2]:
        return sorted(self.terms, reverse=True)

    def degrees(self) -> set[int]:
        return {a + b for (a, b) in self.terms}

    def _check_ring(self, other: "ChowElement") -> None:
        if self.N != other.N:
            raise ValueError(f"mixed boxes: {self.N} and {other.N}")

    def __add__(self, other: "ChowElement") -> "ChowElement":
        self._check_ring(other)
        acc = dict(self.terms)
        for (a, b), c in other.terms.items():
            _insert(acc, self.N, a, b, c)
        return ChowElement(self.N, acc)

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        return self + (-other)

    def __neg__(self) -> "ChowElement":
        return ChowElement(self.N, {ab: -c for ab, c in self.terms.items()})

    def scale(self, c) -> "ChowElement":
        c = Fraction(c)
        return ChowElement(self.N, {ab: c * v for ab, v in self.terms.items()})

    def __rmul__(self, c) -> "ChowElement":
        return self.scale(c)

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "terms": [
                {"a": a, "b": b, "coeff": format_rational(c)}
                for (a, b), c in sorted(self.terms.items(), reverse=True)
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChowElement":
        terms = {
            (int(t["a"]), int(t["b"])): parse_rational(t["coeff"])
            for t in data["terms"]
        }
        return cls(int(data["N"]), terms)


def zero(N: int) -> ChowElement:
    return ChowElement(N, {})


def schubert(N: int, a: int, b: int) -> ChowElement:
    """The single Schubert class s(a, b)."""
    if not valid_partition(N, a, b):
        raise ValueError(f"({a},{b}) does not fit in the 2 x {N} box")
    return ChowElement(N, {(a, b): Fraction(1)})


def box_partitions(N: int, p: int) -> list[Partition2]:
    """Weight-p partitions in the 2 x N box, sorted (a, b) descending."""
    out = []
    for b in range(max(0, p - N), p // 2 + 1):
        a = p - b
        if a <= N:
            out.append((a, b))
    return out


def betti(N: int, p: int) -> int:
    """Rank of the codimension-p piece of the Chow group."""
    if p < 0 or p > 2 * N:
        return 0
    return len(box_partitions(N, p))


def lefschetz_op(x: ChowElement) -> ChowElement:
    """Hyperplane multiplication by the two-row Pieri rule.

    s(a, b) goes to s(a+1, b) + s(a, b+1), with symbols leaving the box
    dropped.
    """
    acc: dict[Partition2, Fraction] = {}
    for (a, b), c in x.terms.items():
        _insert(acc, x.N, a + 1, b, c)
        _insert(acc, x.N, a, b + 1, c)
    return ChowElement(x.N, acc)


def skew_syt_count(lam: Partition2, mu: Partition2) -> int:
    """Number of standard tableaux of the two-row skew shape lam/mu.

    Closed form: with m cells, C(m, lam1-mu1) - C(m, lam1-mu2+1), a ballot
    count minus its reflected overcount.  The empty shape counts 1.
    """
    (l1, l2), (m1, m2) = lam, mu
    if not (l1 >= l2 >= 0 and m1 >= m2 >= 0):
        raise ValueError(f"{lam}/{mu}: arguments must be two-row partitions")
    if l1 < m1 or l2 < m2:
        raise ValueError(f"{lam}/{mu}: shapes are not nested")
    size = (l1 + l2) - (m1 + m2)
    return binomial(size, l1 - m1) - binomial(size, l1 - m2 + 1)


def lefschetz_power(x: ChowElement, r: int) -> ChowElement:
    """r-fold hyperplane multiplication in a single closed-form pass.

    The multiplicity of s(lam) in the r-th power applied to s(mu) is the
    standard tableau count of the skew shape lam/mu, so the result is
    assembled directly instead of iterating lefschetz_op r times.
    """
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")
    if r == 0:
        return x
    N = x.N
    acc: dict[Partition2, Fraction] = {}
    for (m1, m2), c in x.terms.items():
        size = m1 + m2 + r
        for b in range(m2, min(N, size // 2) + 1):
            a = size - b
            if a < b or a > N or a < m1:
                continue
            f = skew_syt_count((a, b), (m1, m2))
            if f:
                _insert(acc, N, a, b, c * f)
    return ChowElement(N, acc)


def hodge_star(x: ChowElement) -> ChowElement:
    """Star involution sending s(a,b) to a positive multiple of s(N-b, N-a).

    The weight is (a+1)! b! / ((N-a)! (N-b+1)!); applying the map twice gives
    the identity.
    """
    N = x.N
    acc: dict[Partition2, Fraction] = {}
    for (a, b), c in x.terms.items():
        w = Fraction(
            factorial(a + 1) * factorial(b),
            factorial(N - a) * factorial(N - b + 1),
        )
        _insert(acc, N, N - b, N - a, c * w)
    return ChowElement(N, acc)


def intersection_pairing(x: ChowElement, y: ChowElement) -> Fraction:
    """Poincare pairing: s(a,b) meets s(N-b, N-a) in a point, all else is 0."""
    x._check_ring(y)
    N = x.N
    total = _ZERO
    for (a, b), c in x.terms.items():
        d = y.terms.get((N - b, N - a))
        if d is not None:
            total += c * d
    return total


def primitive_class(N: int, k: int) -> ChowElement:
    """Integral generator of the codimension-2k primitive part.

    The class sum_j (-1)^j C(N+1-j, N-2k) C(N-2k+j, N-2k) s(2k-j, j) spans
    the kernel of the (2N-4k+1)-st hyperplane power in codimension 2k.
    """
    if not 0 <= 2 * k <= N:
        raise ValueError(f"need 0 <= 2k <= N, got N={N}, k={k}")
    n = N - 2 * k
    acc: dict[Partition2, Fraction] = {}
    for j in range(k + 1):
        c = (-1) ** j * binomial(N + 1 - j, n) * binomial(n + j, n)
        _insert(acc, N, 2 * k - j, j, Fraction(c))
    return ChowElement(N, acc)


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix, by row reduction."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [u - f * v for u, v in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [_ZERO] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][free]
        basis.append(v)
    return basis


def lefschetz_kernel(N: int, p: int) -> list[ChowElement]:
    """Exact basis of the kernel of hyperplane multiplication in codimension p."""
    if not 0 <= p <= 2 * N:
        raise ValueError(f"need 0 <= p <= 2N, got p={p}, N={N}")
    dom = box_partitions(N, p)
    cod = box_partitions(N, p + 1)
    cod_index = {lam: i for i, lam in enumerate(cod)}
    rows = [[_ZERO] * len(dom) for _ in cod]
    for j, lam in enumerate(dom):
        image = lefschetz_op(schubert(N, *lam))
        for mu, c in image.terms.items():
            rows[cod_index[mu]][j] = c
    return [
        ChowElement(N, {lam: v[j] for j, lam in enumerate(dom)})
        for v in _nullspace(rows, len(dom))
    ]


@dataclass(frozen=True)
class PrimitiveProfile:
    """Primitive ranks in codimension 0..N, plus the isolation certificate."""

    N: int
    dims: tuple[int, ...]
    isolated: bool  # every positive rank is preceded by a zero rank


def primitive_profile(N: int) -> PrimitiveProfile:
    """Primitive ranks computed two independent ways, cross-checked.

    Route one counts betti(p) - betti(p-1); route two takes the star image of
    the kernel of hyperplane multiplication in the complementary codimension.
    A mismatch means a real inconsistency and raises rather than returning.
    """
    dims = []
    for p in range(N + 1):
        counted = max(betti(N, p) - betti(N, p - 1), 0)
        starred = [hodge_star(v) for v in lefschetz_kernel(N, 2 * N - p)]
        if any(v.is_zero() for v in starred) or len(starred) != counted:
            raise ArithmeticError(
                f"primitive rank mismatch at N={N}, p={p}: "
                f"betti difference {counted}, kernel rank {len(starred)}"
            )
        dims.append(counted)
    isolated = all(
        d == 0 or p == 0 or dims[p - 1] == 0 for p, d in enumerate(dims)
    )
    return PrimitiveProfile(N, tuple(dims), isolated)
