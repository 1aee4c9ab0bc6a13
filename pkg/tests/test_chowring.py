from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from grasshodge.chowring import (
    ChowElement,
    betti,
    box_partitions,
    hodge_star,
    intersection_pairing,
    lefschetz_kernel,
    lefschetz_op,
    lefschetz_power,
    primitive_class,
    primitive_profile,
    schubert,
    skew_syt_count,
    zero,
)


def _syt_oracle(lam, mu):
    """Count standard fillings of the two-row skew shape by brute-force DP."""
    (l1, l2), (m1, m2) = lam, mu
    a, b = l1 - m1, l2 - m2

    @lru_cache(maxsize=None)
    def f(i, j):
        if i == 0 and j == 0:
            return 1
        total = 0
        if i > 0:
            total += f(i - 1, j)
        # the j-th cell of the lower row sits in column m2 + j and needs the
        # upper cell in that column (when there is one) already filled
        if j > 0 and m2 + j <= m1 + i:
            total += f(i, j - 1)
        return total

    return f(a, b)


def test_syt_counts_match_oracle():
    for l1 in range(7):
        for l2 in range(l1 + 1):
            for m1 in range(l1 + 1):
                for m2 in range(min(l2, m1) + 1):
                    got = skew_syt_count((l1, l2), (m1, m2))
                    assert got == _syt_oracle((l1, l2), (m1, m2)), ((l1, l2), (m1, m2))


def test_syt_straight_shapes():
    assert skew_syt_count((2, 1), (0, 0)) == 2
    assert skew_syt_count((3, 3), (0, 0)) == 5  # Catalan number C_3
    assert skew_syt_count((4, 4), (0, 0)) == 14
    assert skew_syt_count((0, 0), (0, 0)) == 1


def test_syt_rejects_bad_shapes():
    with pytest.raises(ValueError):
        skew_syt_count((1, 2), (0, 0))  # not a partition
    with pytest.raises(ValueError):
        skew_syt_count((2, 1), (3, 0))  # mu sticks out of lam


def test_box_partitions_and_betti():
    assert box_partitions(3, 0) == [(0, 0)]
    assert box_partitions(3, 3) == [(3, 0), (2, 1)]
    assert box_partitions(3, 6) == [(3, 3)]
    for N in range(1, 9):
        total = sum(betti(N, p) for p in range(2 * N + 1))
        assert total == (N + 1) * (N + 2) // 2  # number of box partitions
        for p in range(2 * N + 1):
            assert betti(N, p) == betti(N, 2 * N - p)


def test_pieri_on_basis():
    x = lefschetz_op(schubert(4, 2, 1))
    assert x.coeff(3, 1) == 1
    assert x.coeff(2, 2) == 1
    assert len(x.terms) == 2
    # at the box corner both moves leave the box
    assert lefschetz_op(schubert(4, 4, 4)).is_zero()


def test_lefschetz_power_matches_iterated_op():
    for N in (2, 3, 4):
        for (a, b) in box_partitions(N, 2):
            x = schubert(N, a, b)
            iterated = x
            for r in range(5):
                assert lefschetz_power(x, r).terms == iterated.terms
                iterated = lefschetz_op(iterated)


def test_lefschetz_power_matches_iterated_on_sparse_element():
    N = 12
    x = (
        schubert(N, 3, 1).scale(Fraction(2, 7))
        - schubert(N, 4, 0)
        + schubert(N, 2, 2).scale(5)
    )
    iterated = x
    for r in range(2 * N + 1):
        assert lefschetz_power(x, r).terms == iterated.terms
        iterated = lefschetz_op(iterated)


@given(st.integers(1, 6), st.data())
def test_lefschetz_power_linear(N, data):
    p = data.draw(st.integers(0, 2 * N))
    parts = box_partitions(N, p)
    coeffs = data.draw(
        st.lists(st.fractions(), min_size=len(parts), max_size=len(parts))
    )
    x = zero(N)
    for c, (a, b) in zip(coeffs, parts):
        x = x + schubert(N, a, b).scale(c)
    r = data.draw(st.integers(0, 4))
    lhs = lefschetz_power(x, r)
    rhs = zero(N)
    for c, (a, b) in zip(coeffs, parts):
        rhs = rhs + lefschetz_power(schubert(N, a, b), r).scale(c)
    assert lhs.terms == rhs.terms


def test_hodge_star_explicit():
    # star of the fundamental class is the volume normalization
    x = hodge_star(schubert(3, 0, 0))
    assert x.terms == {(3, 3): Fraction(1 * 1, 6 * 24)}  # 1!0!/(3!4!)
    y = hodge_star(schubert(3, 2, 1))
    assert y.terms == {(2, 1): Fraction(6 * 1, 1 * 6)}


def test_hodge_star_is_involution():
    for N in (2, 3, 5):
        for p in range(2 * N + 1):
            for (a, b) in box_partitions(N, p):
                x = schubert(N, a, b)
                assert hodge_star(hodge_star(x)).terms == x.terms


def test_pairing_duality():
    N = 4
    for p in range(2 * N + 1):
        for (a, b) in box_partitions(N, p):
            for (c, d) in box_partitions(N, 2 * N - p):
                want = 1 if (a, b) == (N - d, N - c) else 0
                got = intersection_pairing(schubert(N, a, b), schubert(N, c, d))
                assert got == want


def test_star_pairing_is_positive_on_basis():
    for N in range(1, 9):
        for p in range(2 * N + 1):
            for a, b in box_partitions(N, p):
                x = schubert(N, a, b)
                assert intersection_pairing(x, hodge_star(x)) > 0


def test_lefschetz_op_self_adjoint_for_pairing():
    # enough to check on basis classes of complementary-minus-one degrees
    for N in range(1, 11):
        for p in range(2 * N):
            for xa in box_partitions(N, p):
                x = schubert(N, *xa)
                for ya in box_partitions(N, 2 * N - p - 1):
                    y = schubert(N, *ya)
                    assert intersection_pairing(lefschetz_op(x), y) == (
                        intersection_pairing(x, lefschetz_op(y))
                    )


def test_pairing_degree_mismatch_is_zero():
    assert intersection_pairing(schubert(3, 1, 0), schubert(3, 1, 0)) == 0


def test_primitive_class_is_primitive():
    # alpha sits in codimension 2k and dies under L^(2N-4k+1)
    for N in range(2, 9):
        for k in range(N // 2 + 1):
            alpha = primitive_class(N, k)
            assert alpha.degrees() == {2 * k}
            power = 2 * (N - 2 * k) + 1
            assert lefschetz_power(alpha, power).is_zero()
            assert not lefschetz_power(alpha, power - 1).is_zero()


def test_primitive_class_small_values():
    alpha = primitive_class(4, 1)
    assert alpha.terms == {(2, 0): Fraction(10), (1, 1): Fraction(-18)}


def test_kernel_dimensions():
    # in the top half the kernel of L is one-dimensional in even codimension
    for N in (3, 4, 5):
        for p in range(N, 2 * N + 1):
            kern = lefschetz_kernel(N, p)
            assert len(kern) == betti(N, p) - betti(N, p + 1)


def test_primitive_profile_shape():
    for N in range(1, 12):
        prof = primitive_profile(N)
        assert prof.isolated
        for p, dim in enumerate(prof.dims):
            want = 1 if (p % 2 == 0 and p <= N) else 0
            assert dim == want, (N, p)


def test_chow_element_validation():
    with pytest.raises(ValueError):
        ChowElement(3, {(4, 0): Fraction(1)})
    with pytest.raises(ValueError):
        ChowElement(3, {(1, 2): Fraction(1)})
    with pytest.raises(ValueError):
        schubert(2, 1, 0) + schubert(3, 1, 0)


def test_chow_element_json_round_trip():
    x = schubert(5, 4, 2).scale(Fraction(-7, 3)) + schubert(5, 3, 3)
    data = x.to_json_dict()
    assert data["N"] == 5
    assert ChowElement.from_json_dict(data).terms == x.terms
