#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from sympy import Matrix

from backend.app.equivariant.schema.group import DiagonalPresentationParam
from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.index_service import index_service
from backend.app.equivariant.services.invertible_service import invertible_service
from backend.common.enums import BlockKind
from backend.common.exception import exception as exc
from backend.core.config import settings
from tests.conftest import block_sum, chain, class_of_order, invertible_suite, loop

# x^2 + y^3, x^2 y + y^3, x^2 + x y^3, x^2 y + y^2 z + z^2, x^3 y + y^2 z + z^2
FERMAT_23 = [[2, 0], [0, 3]]
CHAIN_23 = chain(2, 3)
CHAIN_T_23 = [[2, 0], [1, 3]]
CHAIN_222 = chain(2, 2, 2)
CHAIN_322 = chain(3, 2, 2)

SUITE = invertible_suite()


def by_order(group, coeffs: dict[int, int]):
    return burnside_service.from_coefficients(group, {class_of_order(group, o): a for o, a in coeffs.items()})


def g_f(E):
    f = invertible_service.validate(E)
    return f, invertible_service.symmetry_group(f).group


class TestValidate:
    def test_fermat(self):
        f = invertible_service.validate(FERMAT_23)
        assert [b.kind for b in f.blocks] == [BlockKind.fermat, BlockKind.fermat]
        assert f.weights == (Fraction(1, 2), Fraction(1, 3))
        assert str(f) == 'x^2 + y^3'

    def test_chain(self):
        f = invertible_service.validate(CHAIN_23)
        assert len(f.blocks) == 1
        assert f.blocks[0].kind == BlockKind.chain
        assert f.blocks[0].variables == (0, 1)
        assert f.weights == (Fraction(1, 3), Fraction(1, 3))
        assert str(f) == 'x^2*y + y^3'

    def test_loop(self):
        f = invertible_service.validate(loop(2, 3))
        assert f.blocks[0].kind == BlockKind.loop
        assert f.weights == (Fraction(2, 5), Fraction(1, 5))

    def test_mixed(self):
        f = invertible_service.validate(block_sum([[4]], chain(2, 2)))
        assert sorted(b.kind for b in f.blocks) == sorted([BlockKind.fermat, BlockKind.chain])
        assert f.n == 3

    def test_one_variable(self):
        f = invertible_service.validate([[5]])
        assert f.weights == (Fraction(1, 5),)
        assert invertible_service.milnor_number(f) == 4

    @pytest.mark.parametrize(
        'E',
        [
            [[1, 1], [1, 1]],
            [[1, 1, 1], [0, 2, 0], [0, 0, 2]],
            [[2, 2], [0, 3]],
        ],
    )
    def test_rejected(self, E):
        with pytest.raises(exc.InvalidPolynomialError):
            invertible_service.validate(E)

    def test_not_square(self):
        with pytest.raises(exc.InvalidPolynomialError):
            invertible_service.validate([[2, 0]])


class TestMilnorNumber:
    @pytest.mark.parametrize(
        'E,mu',
        [(FERMAT_23, 2), (CHAIN_23, 4), (CHAIN_T_23, 5), (CHAIN_222, 5), (CHAIN_322, 9), (loop(2, 2), 4)],
    )
    def test_values(self, E, mu):
        assert invertible_service.milnor_number(invertible_service.validate(E)) == mu

    @pytest.mark.parametrize(
        'E',
        [[[a]] for a in range(2, 13)]
        + [chain(a, b) for a in range(2, 7) for b in range(2, 7)]
        + [loop(a, b) for a in range(2, 7) for b in range(2, 7)]
        + [block_sum([[a]], [[b]]) for a in (2, 3, 5) for b in (2, 3, 5)]
        + [CHAIN_222, CHAIN_322, loop(2, 2, 2)],
    )
    def test_jacobian(self, E):
        f = invertible_service.validate(E)
        assert invertible_service.milnor_number_jacobian(f) == invertible_service.milnor_number(f)


class TestSymmetryGroup:
    def test_chain(self):
        f, group = g_f(CHAIN_23)
        assert group.order == 6
        assert group_service.is_abelian(group)
        assert (Fraction(5, 6), Fraction(1, 3)) in group.elements
        assert (Fraction(1, 2), Fraction(0)) in group.elements
        # cyclic: an element of order 6 exists
        assert any(len(group_service.closure(group, [g])) == 6 for g in range(group.order))

    @pytest.mark.parametrize('E', SUITE)
    def test_order_is_det(self, E):
        f, group = g_f(E)
        assert group.order == abs(int(Matrix(f.E).det()))
        for a in group.elements:
            assert invertible_service.is_symmetry(f, a)

    def test_bound(self, monkeypatch):
        monkeypatch.setattr(settings, 'max_symmetry_order', 5)
        with pytest.raises(exc.BoundExceededError):
            invertible_service.symmetry_group(invertible_service.validate([[7]]))

    def test_transpose(self):
        f = invertible_service.validate(CHAIN_23)
        assert invertible_service.transpose(f).E == ((2, 0), (1, 3))
        assert invertible_service.transpose(invertible_service.transpose(f)) is f
        fermat = invertible_service.validate(FERMAT_23)
        assert invertible_service.transpose(fermat) is fermat

    def test_foreign_group(self):
        f = invertible_service.validate(CHAIN_23)
        group = group_service.build_group(DiagonalPresentationParam(kind='diagonal', phases=[[(1, 5), (0, 1)]]))
        with pytest.raises(exc.NotASubgroupError):
            invertible_service.check_symmetries(f, group)


class TestDuality:
    @pytest.mark.parametrize('E', SUITE)
    def test_pairing_is_perfect(self, E):
        f = invertible_service.validate(E)
        pair = invertible_service.duality(f)
        assert pair.group.order == pair.dual_group.order
        det = pair.group.order
        for row in pair.pairing:
            for value in row:
                assert det % value.denominator == 0
        assert all(value == 0 for value in pair.pairing[0])

    @pytest.mark.parametrize('E', [CHAIN_23, CHAIN_322, loop(2, 3), block_sum([[2]], loop(2, 2))])
    def test_dual_subgroups(self, E):
        f = invertible_service.validate(E)
        pair = invertible_service.duality(f)
        back = invertible_service.duality(pair.dual)
        assert back.dual_group.group is pair.group.group
        lattice = group_service.build_lattice(pair.group.group)
        for h in lattice.subgroups:
            dual = invertible_service.dual_subgroup(pair, h)
            assert h.order * dual.order == pair.group.order
            assert invertible_service.dual_subgroup(back, dual).members == h.members
        assert invertible_service.dual_subgroup(pair, [0]).order == pair.group.order
        assert invertible_service.dual_subgroup(pair, range(pair.group.order)).order == 1

    def test_pairing_rejects_non_symmetries(self):
        f = invertible_service.validate(CHAIN_23)
        zero = (Fraction(0), Fraction(0))
        with pytest.raises(exc.PairingError):
            invertible_service.pairing(f, (Fraction(1, 5), Fraction(0)), zero)
        with pytest.raises(exc.PairingError):
            invertible_service.pairing(f, zero, (Fraction(1, 5), Fraction(0)))


class TestFixedLoci:
    def test_chain(self):
        f, group = g_f(CHAIN_23)
        lattice = group_service.build_lattice(group)
        z2 = lattice.representative(class_of_order(group, 2))
        z3 = lattice.representative(class_of_order(group, 3))
        assert invertible_service.fixed_locus(group, z2) == (1,)
        assert invertible_service.fixed_locus(group, z3) == ()
        assert invertible_service.fixed_locus(group, [0]) == (0, 1)
        assert invertible_service.chi_milnor_fixed(f, group, z2) == 3
        assert invertible_service.chi_milnor_fixed(f, group, z3) == 0
        assert invertible_service.chi_milnor_fixed(f, group, [0]) == -3

    def test_restrict_to(self):
        assert invertible_service.restrict_to(invertible_service.validate(CHAIN_23), [1]).E == ((3,),)
        assert invertible_service.restrict_to(invertible_service.validate(FERMAT_23), [0]).E == ((2,),)
        assert invertible_service.restrict_to(invertible_service.validate(FERMAT_23), []).n == 0
        with pytest.raises(exc.InvalidPolynomialError):
            invertible_service.restrict_to(invertible_service.validate(CHAIN_23), [0])


class TestIndex:
    @pytest.mark.parametrize(
        'E,expected',
        [
            (FERMAT_23, {1: -1, 2: 1, 3: 1}),
            (CHAIN_23, {1: -1, 2: 1}),
            (CHAIN_T_23, {1: -1, 3: 1}),
            (CHAIN_222, {1: 1, 2: -1, 4: 1}),
            (CHAIN_322, {1: 1, 3: -1, 6: 1}),
            (chain(2, 2, 3), {1: 1, 2: -1, 4: 1}),
        ],
    )
    def test_chi_G(self, E, expected):
        f, group = g_f(E)
        assert invertible_service.chi_G_milnor(f, group) == by_order(group, expected)

    def test_chain_values(self):
        f, group = g_f(CHAIN_23)
        index = invertible_service.index_df(f, group)
        assert index == by_order(group, {6: 1, 1: 1, 2: -1})
        assert burnside_service.cardinality(index) == 4
        mu = invertible_service.equivariant_milnor_number(f, group)
        assert burnside_service.cardinality(mu) == 4
        assert invertible_service.higher_order_index_df(f, group, 0) == 1
        assert invertible_service.higher_order_index_df(f, group, 1) == 5

    @pytest.mark.parametrize('E', SUITE)
    def test_fixed_point_marks(self, E):
        f, group = g_f(E)
        lattice = group_service.build_lattice(group)
        marks = burnside_service.mark_vector(invertible_service.chi_G_milnor(f, group))
        for i, h in enumerate(lattice.subgroups):
            assert marks[lattice.class_of[i]] == invertible_service.chi_milnor_fixed(f, group, h)

    @pytest.mark.parametrize('E', SUITE)
    def test_cardinalities(self, E):
        f, group = g_f(E)
        mu = invertible_service.milnor_number(f)
        assert burnside_service.cardinality(invertible_service.index_df(f, group)) == (-1) ** f.n * mu
        assert burnside_service.cardinality(invertible_service.equivariant_milnor_number(f, group)) == mu
        assert invertible_service.index_df_from_dims(f, group) == invertible_service.index_df(f, group)

    @pytest.mark.parametrize('E', SUITE)
    def test_restriction(self, E):
        f, group = g_f(E)
        index = invertible_service.index_df(f, group)
        for h in group_service.build_lattice(group).subgroups:
            sub = group_service.subgroup_as_group(group, h)
            assert burnside_service.restrict(index, h) == invertible_service.index_df(f, sub)

    @pytest.mark.parametrize('E', SUITE)
    def test_gsv_of_unit_radial(self, E):
        f, group = g_f(E)
        chi = invertible_service.chi_G_milnor(f, group)
        one = burnside_service.one(group)
        assert index_service.gsv_from_radial(one, burnside_service.reduced(chi)) == chi

    def test_trivial_group(self):
        f = invertible_service.validate(CHAIN_322)
        group = group_service.build_group(DiagonalPresentationParam(kind='diagonal', phases=[], dimension=3))
        index = invertible_service.index_df(f, group)
        assert index.coeffs == ((-1) ** 3 * 9,)

    def test_free_fixed_set(self):
        # G_f of x^2 + y^3 has no fixed coordinate, its fixed index is that of the empty space
        f, group = g_f(FERMAT_23)
        data = invertible_service.milnor_data(f, group)
        top = data.per_subgroup[-1]
        assert top.coordinates == ()
        assert top.mu == 1
        assert top.chi == 0
        assert data.chi_G == by_order(group, {1: -1, 2: 1, 3: 1})


class TestDualityCheck:
    def test_chain(self):
        report = invertible_service.duality_check(invertible_service.validate(CHAIN_23))
        assert report.passed
        assert report.r0 == report.r0_dual == 1
        pairs = {p.order: p for p in report.pairs}
        assert pairs[6].dual_order == 1
        assert pairs[6].r1 == pairs[6].r1_dual == 5
        assert pairs[1].r1 == pairs[1].r1_dual == 4

    def test_one_variable_sign(self):
        report = invertible_service.duality_check(invertible_service.validate([[5]]))
        assert report.passed
        pairs = {p.order: p for p in report.pairs}
        assert pairs[1].r1 == 1 - 5
        assert pairs[1].r1_dual == 5 - 1
        assert report.literal_mismatches

    def test_three_variables(self):
        report = invertible_service.duality_check(invertible_service.validate(CHAIN_322))
        assert report.passed
        whole = next(p for p in report.pairs if p.order == 12)
        assert whole.r1 == 8
        assert whole.r1_dual == -8
        assert not whole.literal_equal and whole.sign_corrected_equal

    @pytest.mark.parametrize('E', SUITE)
    def test_suite(self, E):
        report = invertible_service.duality_check(invertible_service.validate(E))
        assert report.r0_equal
        assert report.passed
        order = invertible_service.symmetry_group(invertible_service.validate(E)).order
        assert all(p.order * p.dual_order == order for p in report.pairs)

    def test_bound(self, monkeypatch):
        monkeypatch.setattr(settings, 'max_duality_det', 5)
        with pytest.raises(exc.BoundExceededError):
            invertible_service.duality_check(invertible_service.validate([[7]]))
