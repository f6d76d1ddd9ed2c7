from fractions import Fraction

import pytest

from dimfock.combinat import EMPTY, Partition, PartitionTuple, b_factor, partitions
from dimfock.fock import (
    BosonModule,
    CrystalGenerators,
    CrystalVirasoro,
    GeneratorFamily,
    VirasoroFamily,
    bra_apply,
    jing_build,
    pbw_bra,
    pbw_gram,
    pbw_state,
    state_add,
    state_scale,
    states_equal,
    vacuum_bra,
    virasoro_T,
)
from dimfock.relations import (
    check_crystal_pbw_hl,
    check_crystal_shapovalov,
    check_crystal_virasoro_pbw,
    check_crystal_virasoro_relations,
    check_crystal_x_relations,
    check_jing,
    check_virasoro_relation,
    check_x_relations_n2,
    hl_in_bosons,
    naive_mode_apply,
)

ONE = Fraction(1)


def tup2(a, b):
    return PartitionTuple([Partition(a), Partition(b)])


def test_eta_modes(point2):
    mod = BosonModule(point2, 1, point2.u[:1], 3, kind="qt")
    fam = GeneratorFamily(mod)
    eta = fam._eta(0)
    vac = mod.vacuum()
    assert eta.mode_apply(0, vac, mod) == vac
    got = eta.mode_apply(-1, vac, mod)
    assert got == {PartitionTuple([(1,)]): 1 - 1 / point2.t}
    # any generator mode annihilates below level zero
    for k in (1, 2, 3):
        assert fam.x_mode(1, k)(vac) == {}


def test_x_zero_mode_weight_sum(point2):
    mod = BosonModule(point2, 2, point2.u, 3, kind="qt")
    fam = GeneratorFamily(mod)
    vac = mod.vacuum()
    assert fam.x_mode(1, 0)(vac) == state_scale(vac, point2.u[0] + point2.u[1])


def test_level1_gram_value(point2):
    mod = BosonModule(point2, 1, point2.u[:1], 2, kind="qt")
    fam = GeneratorFamily(mod)
    gram, _ = pbw_gram(1, fam)
    u = point2.u[0]
    assert gram[0][0] == u**2 * (1 - point2.q) * (1 / point2.t - 1)


def test_commutator_example(point2):
    # the displayed bracket of opposite modes of the first current
    pt = point2
    mod = BosonModule(pt, 2, pt.u, 4, kind="qt")
    fam = GeneratorFamily(mod)
    q, t, p = pt.q, pt.t, pt.p
    coef = (1 - q) * (1 - 1 / t) / (1 - p) * (1 / p - p)
    from dimfock.relations import check_x_relations_n2

    assert check_x_relations_n2(2, pt, mode_bound=1) == []
    for lvl in range(3):
        for tup in mod.basis(lvl):
            st = {tup: ONE}
            lhs = state_add(
                fam.x_mode(1, 1)(fam.x_mode(1, -1)(st)),
                state_scale(fam.x_mode(1, -1)(fam.x_mode(1, 1)(st)), Fraction(-1)),
            )
            rhs = state_scale(fam.x_mode(2, 0)(st), coef)
            from dimfock.scalars import Series
            from dimfock.fock import structure_series

            f1 = structure_series(pt, "x1", lvl + 4)
            for l in range(1, lvl + 2):
                rhs = state_add(
                    rhs,
                    state_scale(fam.x_mode(1, 1 - l)(fam.x_mode(1, -1 + l)(st)), -f1[l]),
                )
                rhs = state_add(
                    rhs,
                    state_scale(fam.x_mode(1, -1 - l)(fam.x_mode(1, 1 + l)(st)), f1[l]),
                )
            assert states_equal(lhs, rhs)


def test_virasoro_highest_weight(point2):
    k = point2.fresh_rational("k")
    vac = {PartitionTuple([EMPTY]): ONE}
    assert virasoro_T(0, k, point2, 3)(vac) == state_scale(vac, k + 1 / k)
    assert virasoro_T(1, k, point2, 3)(vac) == {}


def test_virasoro_relation(point2):
    k = point2.fresh_rational("k")
    assert check_virasoro_relation(2, point2, k) == []


def test_x_relations_level3(points2):
    for pt in points2:
        assert check_x_relations_n2(3, pt) == []


def test_crystal_relations_level3(point2):
    u = [point2.fresh_rational(("cu", i)) for i in range(2)]
    assert check_crystal_x_relations(3, point2, u) == []


def test_crystal_virasoro_relations(point2):
    k = point2.fresh_rational("k")
    assert check_crystal_virasoro_relations(3, point2, k) == []


def test_crystal_virasoro_pbw_and_gram(point2):
    k = point2.fresh_rational("k")
    assert check_crystal_virasoro_pbw(4, point2, k) == []
    # diagonal Gram with the b-factor normalization
    mod = BosonModule(point2, 1, [k], 3, kind="crystal")
    fam = CrystalVirasoro(mod, k)
    tinv = 1 / point2.t
    for n in range(1, 4):
        basis = list(partitions(n))
        kets, bras = [], []
        for lam in basis:
            st = mod.vacuum()
            for part in reversed(lam.parts):
                st = fam.t_mode(-part)(st)
            kets.append(st)
            bra = vacuum_bra(mod)
            for part in reversed(lam.parts):
                bra = bra_apply(fam.t_mode(part), bra, mod, 3)
            bras.append(bra)
        for i, lam in enumerate(basis):
            for j, mu in enumerate(basis):
                want = b_factor(lam, tinv) if lam == mu else 0
                assert mod.pair(bras[i], kets[j]) == want


def test_jing_operators(point2):
    assert check_jing(4, point2) == []
    module, state = jing_build(Partition((1,)), point2)
    want = {PartitionTuple([(1,)]): 1 - point2.t}
    assert state == want
    module, state = jing_build(EMPTY, point2)
    assert state == module.vacuum()


def test_crystal_pbw_examples(point2):
    u = [point2.fresh_rational(("cu", i)) for i in range(2)]
    assert check_crystal_pbw_hl(3, point2, u) == []
    assert check_crystal_shapovalov(3, point2, u) == []


def test_mode_oracle(point2):
    mod = BosonModule(point2, 2, point2.u, 6, kind="qt")
    fam = GeneratorFamily(mod)
    for lvl in range(0, 4):
        for tup in mod.basis(lvl):
            st = {tup: ONE}
            for i in (1, 2):
                for k in (-2, -1, 0, 1, 2):
                    got = fam.x_mode(i, k)(st)
                    naive = {}
                    for term in fam.x_terms(i):
                        for key, v in naive_mode_apply(term, k, st, mod).items():
                            naive[key] = naive.get(key, Fraction(0)) + v
                    naive = {key: v for key, v in naive.items() if v}
                    assert got == naive


def test_crystal_whittaker_gram(point2):
    # diagonal inverse entries feed the crystal norm series
    from dimfock.kacdet import crystal_virasoro_shapovalov

    gram, basis = crystal_virasoro_shapovalov(3, point2)
    tinv = 1 / point2.t
    for i, lam in enumerate(basis):
        for j, mu in enumerate(basis):
            assert gram[i][j] == (b_factor(lam, tinv) if lam == mu else 0)
