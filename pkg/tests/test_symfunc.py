from fractions import Fraction

import pytest

from dimfock.combinat import EMPTY, Partition, b_factor, dominance_le, partitions
from dimfock.symfunc import (
    DegreeCapError,
    SymFunc,
    convert,
    elementary_in_p,
    hall_littlewood,
    hl_pairing_identities,
    inner_hl,
    inner_prod,
    macdonald,
    macdonald_p,
    monomial_in_p,
    principal_specialization,
    principal_specialization_closed,
    z_factor,
)


def test_conversion_examples():
    assert monomial_in_p(Partition((1,))) == SymFunc.power_sum((1,))
    half = Fraction(1, 2)
    expected = SymFunc({Partition((1, 1)): half, Partition((2,)): -half})
    assert monomial_in_p(Partition((1, 1))) == expected
    assert elementary_in_p(Partition((2,))) == expected


def test_conversion_roundtrip():
    for n in range(1, 7):
        for lam in partitions(n):
            f = monomial_in_p(lam)
            assert convert(convert(f, "m"), "p") == f
            g = elementary_in_p(lam)
            assert convert(convert(g, "e"), "p") == g


def test_degree_cap():
    with pytest.raises(DegreeCapError):
        monomial_in_p(Partition((13,)))


def test_inner_product_examples(point2):
    q, t = point2.q, point2.t
    p1 = SymFunc.power_sum((1,))
    assert inner_prod(p1, p1, q, t) == (1 - q) / (1 - t)
    assert inner_prod(SymFunc.power_sum((2,)), SymFunc.power_sum((1, 1)), q, t) == 0
    p2 = SymFunc.power_sum((2,))
    assert inner_prod(p2, p2, q, t) == 2 * (1 - q**2) / (1 - t**2)


def test_macdonald_examples(point2):
    q, t = point2.q, point2.t
    assert macdonald_p(Partition((1,)), q, t) == monomial_in_p(Partition((1,)))
    got = macdonald_p(Partition((2,)), q, t)
    want = monomial_in_p(Partition((2,))) + monomial_in_p(Partition((1, 1))).scale(
        (1 + q) * (1 - t) / (1 - q * t)
    )
    assert got == want
    p1, _ = macdonald(Partition((1,)), point2)
    p2, _ = macdonald(Partition((2,)), point2)
    assert inner_prod(p1, p2, q, t) == 0  # different degrees


def test_orthogonality_and_triangularity(points2):
    for pt in points2:
        q, t = pt.q, pt.t
        for n in range(1, 7):
            macs = {lam: macdonald_p(lam, q, t) for lam in partitions(n)}
            for lam, f in macs.items():
                fm = convert(f, "m")
                assert fm[lam] == 1
                for mu, c in fm.coeffs.items():
                    if c:
                        assert dominance_le(mu, lam)
            for lam in macs:
                for mu in macs:
                    if lam != mu:
                        assert inner_prod(macs[lam], macs[mu], q, t) == 0


def test_hall_littlewood_examples(point2):
    t = point2.t
    _, q1 = hall_littlewood(Partition((1,)), tval=t)
    assert inner_hl(q1, q1, t) == 1 - t
    for s in (1, 2, 3):
        _, qs = hall_littlewood(Partition((1,) * s), tval=t)
        es = elementary_in_p(Partition((s,)))
        assert qs == es.scale(b_factor(Partition((1,) * s), t))
    p_empty, _ = hall_littlewood(EMPTY, tval=t)
    assert p_empty == SymFunc.one()


def test_hl_b_duality(point2):
    # the b-normalized function equals the Gram-normalized dual at q = 0
    t = point2.t
    for n in range(1, 6):
        for lam in partitions(n):
            p_lam, q_lam = hall_littlewood(lam, tval=t)
            norm = inner_prod(p_lam, p_lam, Fraction(0), t)
            assert q_lam == p_lam.scale(1 / norm)


def test_principal_specialization(point2):
    t = point2.t
    r = point2.fresh_rational("spec-r")
    assert principal_specialization(Partition((1,)), r, tval=t) == 1 - r
    assert principal_specialization(EMPTY, r, tval=t) == 1
    lam = Partition((2, 1))
    assert principal_specialization(lam, r, tval=t) == t * (1 - r) * (1 - r / t)
    for n in range(1, 7):
        for lam in partitions(n):
            assert principal_specialization(lam, r, tval=t) == principal_specialization_closed(
                lam, r, t
            )


def test_hl_pairing_identities(point2):
    t = point2.t
    res = hl_pairing_identities(Partition((1,)), tval=t)
    assert res["elementary_vs_hl"][0] == -1
    lam = Partition((2, 1))
    res = hl_pairing_identities(lam, tval=t)
    assert res["row_hl_vs_hl"][0] == t**4 * (1 - 1 / t) * (1 - 1 / t**2)
    for n in range(0, 7):
        for lam in partitions(n):
            assert hl_pairing_identities(lam, tval=t)["ok"]


def test_z_factor():
    assert z_factor(Partition((2, 1, 1))) == 4
    assert z_factor(EMPTY) == 1
