#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import hypothesis.strategies as st
import pytest

from hypothesis import given, settings as hypothesis_settings

from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.gspace_service import gspace_service
from backend.app.equivariant.services.index_service import index_service
from backend.common.enums import InversionFlavor
from backend.common.exception import exception as exc
from tests.conftest import PERM_GROUPS, burnside_elements, complex_suite, standard_group

SUITE = complex_suite()


class TestStrata:
    def test_index_from_strata(self):
        group = standard_group('Z6')
        data = index_service.stratum_data(group, [('H6_3', 1), ('H1_0', 6), ('H2_1', -3)])
        index = index_service.index_from_strata(data)
        assert index.coeffs == (1, -1, 0, 1)
        assert burnside_service.cardinality(index) == 6 - 3 + 1

    def test_non_integral_orbit_count(self):
        group = standard_group('Z6')
        with pytest.raises(exc.IntegralityError):
            index_service.index_from_strata(index_service.stratum_data(group, [('H1_0', 1)]))

    def test_quotient_and_pullback(self):
        group = standard_group('S3')
        data = gspace_service.stratified_data(group, [('H6_5', 1), ('H2_1', -1), ('H1_0', 2)])
        expected = burnside_service.from_coefficients(group, {'H6_5': 1, 'H2_1': -1, 'H1_0': 2})
        assert index_service.index_from_quotient(data) == expected
        assert index_service.index_from_pullback_form(data) == expected


class TestFixedSetInversion:
    def test_forward_s3(self):
        b = burnside_service.basis(standard_group('S3'), 'H2_1')
        data = index_service.fixed_indices_from_index(b)
        assert data.per_subgroup == (3, 1, 1, 1, 0, 0)
        assert data.per_class == (3, 3, 0, 0)

    def test_forward_unit(self, any_group):
        data = index_service.fixed_indices_from_index(burnside_service.one(any_group))
        assert set(data.per_subgroup) == {1}
        assert set(data.per_class) == {1}

    @pytest.mark.parametrize('flavor', list(InversionFlavor))
    @pytest.mark.parametrize('name', list(PERM_GROUPS))
    @given(data=st.data())
    @hypothesis_settings(max_examples=200, deadline=None)
    def test_round_trip(self, name, flavor, data):
        b = data.draw(burnside_elements(name))
        fixed = index_service.fixed_indices_from_index(b)
        assert index_service.index_from_fixed_indices(fixed, flavor) == b

    def test_sub_flavor_matches_marks(self, any_group):
        # ind(V^H) is the mark of the index at H
        lattice = group_service.build_lattice(any_group)
        b = burnside_service.basis(any_group, 0) - 2 * burnside_service.one(any_group)
        marks = burnside_service.mark_vector(b)
        data = index_service.fixed_indices_from_index(b)
        assert data.per_subgroup == tuple(marks[lattice.class_of[i]] for i in range(lattice.size))

    def test_conjugates_are_filled_in(self):
        group = standard_group('S3')
        data = index_service.fixed_set_data(group, {'H1_0': 3, 'H2_1': 1, 'H3_4': 0, 'H6_5': 0})
        assert data.per_subgroup == (3, 1, 1, 1, 0, 0)
        index = index_service.index_from_fixed_indices(data, InversionFlavor.sub)
        assert index == burnside_service.basis(group, 'H2_2')

    def test_missing_subgroup(self):
        with pytest.raises(exc.InconsistentDataError):
            index_service.fixed_set_data(standard_group('S3'), {'H1_0': 3, 'H2_1': 1, 'H6_5': 0})

    def test_missing_class(self):
        group = standard_group('Z2')
        with pytest.raises(exc.InconsistentDataError):
            index_service.fixed_set_data(group, {'H1_0': 1, 'H2_1': 1}, {'H1_0': 1})

    def test_not_constant_on_class(self):
        group = standard_group('S3')
        data = index_service.fixed_set_data(group, {'H1_0': 3, 'H2_1': 1, 'H2_2': 2, 'H2_3': 1, 'H3_4': 0, 'H6_5': 0})
        with pytest.raises(exc.InconsistentDataError):
            index_service.index_from_fixed_indices(data, InversionFlavor.sub)

    def test_flavors_disagree(self):
        group = standard_group('Z6')
        a = index_service.fixed_indices_from_index(burnside_service.one(group))
        b = index_service.fixed_indices_from_index(burnside_service.basis(group, 'H1_0'))
        mixed = type(a)(group=group, per_subgroup=a.per_subgroup, per_class=b.per_class)
        with pytest.raises(exc.InconsistentDataError):
            index_service.index_from_fixed_indices(mixed, InversionFlavor.both)
        assert index_service.index_from_fixed_indices(mixed, InversionFlavor.sub) == burnside_service.one(group)

    def test_conj_needs_class_data(self):
        group = standard_group('Z2')
        data = index_service.fixed_set_data(group, {'H1_0': 1, 'H2_1': 1})
        with pytest.raises(exc.InputError):
            index_service.index_from_fixed_indices(data, InversionFlavor.conj)
        assert index_service.index_from_fixed_indices(data) == burnside_service.one(group)

    def test_non_integral(self):
        group = standard_group('Z2')
        data = index_service.fixed_set_data(group, {'H1_0': 0, 'H2_1': 1})
        with pytest.raises(exc.IntegralityError):
            index_service.index_from_fixed_indices(data, InversionFlavor.sub)

    def test_form_dims(self):
        group = group_service.trivial_group()
        assert index_service.index_from_form_dims(group, {0: 4}, {0: 2}) == 4 * burnside_service.one(group)
        assert index_service.index_from_form_dims(group, {0: 4}, {0: 3}) == -4 * burnside_service.one(group)
        with pytest.raises(exc.MissingDimensionError):
            index_service.index_from_form_dims(group, {}, {0: 3})


class TestOrbits:
    def test_induce(self):
        group = standard_group('S3')
        lattice = group_service.build_lattice(group)
        datum = index_service.orbit_datum(group, lattice.subgroups[lattice.find('H2_3')], {'H2_1': 1, 'H1_0': -1})
        induced = index_service.induce_orbit_index(datum, group)
        assert induced == burnside_service.from_coefficients(group, {'H2_1': 1, 'H1_0': -1})

    def test_induce_over_wrong_group(self):
        group = standard_group('S3')
        datum = index_service.orbit_datum(group, [0], {0: 1})
        with pytest.raises(exc.NotASubgroupError):
            index_service.induce_orbit_index(datum, standard_group('Z6'))

    def test_half_turn(self):
        # two poles fixed by the whole group, each of index 1
        X = SUITE['octahedron_half_turn']
        group = X.group
        chi = gspace_service.chi_G_simplicial(X)
        pole = index_service.orbit_datum(group, range(group.order), {'H2_1': 1})
        report = index_service.poincare_hopf_check(chi, [pole, pole])
        assert report.passed
        assert report.discrepancy.is_zero()

    def test_antipodal_double_count(self):
        X = SUITE['octahedron_antipodal']
        group = X.group
        chi = gspace_service.chi_G_simplicial(X)
        wrong = index_service.orbit_datum(group, [0], {0: 2})
        report = index_service.poincare_hopf_check(chi, [wrong])
        assert not report.passed
        assert report.discrepancy == burnside_service.basis(group, 0)

    def test_empty(self, any_group):
        report = index_service.poincare_hopf_check(burnside_service.zero(any_group), [])
        assert report.passed
        assert not index_service.poincare_hopf_check(burnside_service.one(any_group), []).passed

    @pytest.mark.parametrize('name', list(SUITE))
    def test_barycentric_field(self, name):
        X = SUITE[name]
        chi = gspace_service.chi_G_simplicial(X)
        orbits = index_service.orbit_data_from_complex(X)
        assert index_service.poincare_hopf_check(chi, orbits).passed
        assert index_service.gsv_poincare_hopf_check(chi, orbits).passed

    @pytest.mark.parametrize('name', ['square_reflection', 'triangle_symmetric', 'octahedron_product'])
    def test_corrupted_field(self, name):
        X = SUITE[name]
        chi = gspace_service.chi_G_simplicial(X)
        orbits = index_service.orbit_data_from_complex(X)
        first = orbits[0]
        orbits[0] = type(first)(isotropy=first.isotropy, local_index=-first.local_index)
        report = index_service.poincare_hopf_check(chi, orbits)
        assert not report.passed
        assert report.total - report.expected == report.discrepancy


class TestGsv:
    def test_from_radial(self):
        group = standard_group('Z6')
        chi = burnside_service.from_coefficients(group, {'H1_0': -1, 'H2_1': 1, 'H3_2': 1})
        chibar = burnside_service.reduced(chi)
        radial = burnside_service.one(group) - chi
        # the radial index of df is minus the reduced characteristic, so GSV vanishes
        assert index_service.gsv_from_radial(radial, chibar).is_zero()
        assert index_service.gsv_from_radial(burnside_service.one(group), chibar) == chi

    def test_single_subgroup(self):
        group = group_service.trivial_group()
        one = burnside_service.one(group)
        assert index_service.gsv_assemble_from_dims(group, {0: 5}, {0: 2}, 0) == 5 * one
        assert index_service.gsv_assemble_from_dims(group, {0: 5}, {0: 2}, 1) == -5 * one
        assert index_service.gsv_assemble_from_dims(group, {}, {0: 2}, 2).is_zero()

    def test_missing_dimensions(self):
        group = standard_group('Z2')
        with pytest.raises(exc.MissingDimensionError):
            index_service.gsv_assemble_from_dims(group, {0: 1, 1: 1}, {0: 2}, 0)
        with pytest.raises(exc.MissingDimensionError):
            index_service.gsv_assemble_from_dims(group, {0: 1}, {0: 2, 1: 1}, 0)
        # below the dimension of the complete intersection no entry is needed
        assert index_service.gsv_assemble_from_dims(group, {0: 2}, {0: 1, 1: 0}, 0) == -burnside_service.basis(group, 0)
        with pytest.raises(exc.IntegralityError):
            index_service.gsv_assemble_from_dims(group, {0: 1}, {0: 1, 1: 0}, 0)

    @given(burnside_elements(), st.integers(0, 2), st.data())
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_matches_forward_map(self, b, k, data):
        lattice = group_service.build_lattice(b.group)
        forward = index_service.fixed_indices_from_index(b).per_subgroup
        fixed_dims = {i: k + 1 + data.draw(st.integers(0, 2)) for i in range(lattice.size)}
        dims = {i: (-1) ** (fixed_dims[i] - k) * forward[i] for i in range(lattice.size)}
        assert index_service.gsv_assemble_from_dims(b.group, dims, fixed_dims, k) == b

    def test_equivariant_milnor(self):
        group = standard_group('Z6')
        chibar = burnside_service.from_coefficients(group, {'H1_0': -1, 'H2_1': 1, 'H6_3': -1})
        assert index_service.equivariant_milnor(chibar, 1) == chibar
        assert index_service.equivariant_milnor(chibar, 2) == -chibar
        assert burnside_service.cardinality(index_service.equivariant_milnor(chibar, 2)) == 4

    def test_higher_order(self):
        group = standard_group('Z6')
        b = burnside_service.from_coefficients(group, {'H6_3': 1, 'H1_0': 1, 'H2_1': -1})
        assert index_service.higher_order_index(b, 0) == 1
        assert index_service.orbifold_index(b) == 6 + 1 - 2
        assert index_service.higher_order_index(b, 2) == 36 + 1 - 4
