from fractions import Fraction

import pytest

from dimfock.combinat import EMPTY, Partition, PartitionTuple, b_factor, b_factor_neg, partitions
from dimfock.kacdet import (
    constrained_point_single,
    crystal_whittaker_norm,
    kac_det_check,
    kac_det_formula,
    kac_det_vanishes_on_line,
    rectangle_tuple,
    singular_vector_check,
    singular_vector_check_multi,
    staircase_tuple_A,
    staircase_tuple_B,
    virasoro_shapovalov,
    whittaker_norm,
)


def test_kac_det_level1_rank1(point1):
    lhs, rhs = kac_det_check(1, 1, point1)
    u = point1.u[0]
    assert lhs == rhs == (1 - point1.q) * (-1 + 1 / point1.t) * u**2


def test_kac_det_rank1_closed_form(point1):
    # the closed form collapses to the b-factors and a power of the weight
    for n in (1, 2, 3):
        lhs, rhs = kac_det_check(n, 1, point1)
        assert lhs == rhs
        expect = Fraction(1)
        for lam in partitions(n):
            expect *= b_factor(lam, point1.q) * b_factor_neg(lam, 1 / point1.t)
        expect *= point1.u[0] ** (2 * sum(lam.length for lam in partitions(n)))
        assert rhs == expect


def test_kac_det_contains_weight_line(point2):
    q, t = point2.q, point2.t
    u1, u2 = point2.u
    rhs = kac_det_formula(1, 2, point2)
    factor = (u1 - q * u2 / t) * (u1 - t * u2 / q)
    assert (rhs / factor) * factor == rhs
    quotient = rhs / ((u1 * u2) ** 2 * factor)
    for lam_t in [((1,), ()), ((), (1,))]:
        pass
    assert quotient == b_factor(Partition((1,)), q) ** 2 * b_factor_neg(
        Partition((1,)), 1 / t
    ) ** 2


def test_kac_det_vanishing(point2):
    assert kac_det_vanishes_on_line(2, 2, point2, 1, 1)
    assert kac_det_vanishes_on_line(2, 2, point2, 2, 1)


def test_whittaker_level0_and_shapovalov(point2):
    k = point2.fresh_rational("whit-k")
    series = whittaker_norm(1, k, point2)
    assert series[0] == 1
    gram, basis = virasoro_shapovalov(1, k, point2)
    assert series[4] == 1 / gram[0][0]


def test_whittaker_matches_instanton_series(points2):
    from dimfock.nekrasov import z_pure

    for pt in points2:
        k = pt.fresh_rational("whit-k")
        assert whittaker_norm(2, k, pt) == z_pure(2, k * k, pt)


def test_crystal_whittaker(point2):
    t = point2.t
    series = crystal_whittaker_norm(2, point2)
    assert series[4] == 1 / (1 - 1 / t)
    assert series[8] == 1 / ((1 - 1 / t) * (1 - 1 / t**2))
    assert crystal_whittaker_norm(2, point2, direct=True) == series


def test_rectangle_and_staircase_builders():
    assert rectangle_tuple(2, 1, 2, 3) == PartitionTuple([EMPTY, Partition((3, 3))])
    assert rectangle_tuple(3, 2, 1, 2) == PartitionTuple(
        [EMPTY, Partition((2,)), EMPTY]
    )
    assert staircase_tuple_A(3, [1, 1], [1, 1]) == PartitionTuple(
        [EMPTY, EMPTY, Partition((2,))]
    )
    assert staircase_tuple_A(3, [2, 1], [1, 1]) == PartitionTuple(
        [EMPTY, EMPTY, Partition((2, 1))]
    )
    assert staircase_tuple_B(3, [1, 2], [1, 1]) == PartitionTuple(
        [EMPTY, Partition((1,)), Partition((2,))]
    )


def test_singular_vectors_rank2(point2):
    for (r, s) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)]:
        res = singular_vector_check(point2, 2, 1, r, s)
        assert res["bad_modes"] == []
        assert res["restriction_ok"]
        assert res["tuple"] == rectangle_tuple(2, 1, r, s)


def test_singular_vectors_rank3(point3):
    for i in (1, 2):
        for (r, s) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)]:
            res = singular_vector_check(point3, 3, i, r, s)
            assert res["bad_modes"] == [], (i, r, s)
            assert res["restriction_ok"]


def test_singular_vectors_multi_constraint(point3):
    for case, rs, ss in [
        ("A", [1, 1], [1, 1]),
        ("A", [2, 1], [1, 1]),
        ("B", [1, 2], [1, 1]),
    ]:
        res = singular_vector_check_multi(point3, 3, rs, ss, case)
        assert res["bad_modes"] == [], (case, rs, ss)


def test_no_singular_vector_at_generic_weights(point2):
    # nonzero determinant certifies the absence of degenerate vectors
    lhs, rhs = kac_det_check(1, 2, point2)
    assert lhs == rhs != 0
