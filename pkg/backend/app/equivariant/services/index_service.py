#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from backend.app.equivariant.model.burnside import BurnsideElement
from backend.app.equivariant.model.group import FiniteGroup, Subgroup
from backend.app.equivariant.model.gspace import GSimplicialComplex, StratifiedGData
from backend.app.equivariant.model.index import (
    FixedSetIndexData,
    PoincareHopfReport,
    SingularOrbitDatum,
    StratumIndexData,
)
from backend.app.equivariant.services.burnside_service import SubgroupRef, burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.gspace_service import gspace_service
from backend.common.enums import InversionFlavor
from backend.common.exception.exception import errors
from backend.common.log import log


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        log.warning(f'{what} is not integral: {value}')
        raise errors.IntegralityError(msg=f'{what} is {value}, not an integer')
    return int(value)


class IndexService:
    """
    Burnside 环中的等变径向指标与 GSV 指标
    """

    @staticmethod
    def stratum_data(group: FiniteGroup, entries: Iterable[tuple[SubgroupRef, int]]) -> StratumIndexData:
        return StratumIndexData(
            group=group,
            entries=tuple((burnside_service.class_of(group, ref), int(ind)) for ref, ind in entries),
        )

    @staticmethod
    def index_from_strata(data: StratumIndexData) -> BurnsideElement:
        """
        按层求和 (|G_i|/|G|) ind_i [G/G_i]

        :param data: 每层的迷向类及该层上的总指标
        :return:
        """
        group = data.group
        lattice = group_service.build_lattice(group)
        coeffs: dict[int, int] = {}
        for c, ind in data.entries:
            order = lattice.representative(c).order
            a = _integral(Fraction(order * ind, group.order), f'orbit count of {lattice.class_label(c)}')
            coeffs[c] = coeffs.get(c, 0) + a
        return burnside_service.from_coefficients(group, coeffs)

    @staticmethod
    def index_from_quotient(data: StratifiedGData) -> BurnsideElement:
        """
        由商向量场求指标

        :param data: 每个迷向类上商向量场在商层上的指标
        :return:
        """
        return gspace_service.chi_G_stratified(data)

    @staticmethod
    def index_from_pullback_form(data: StratifiedGData) -> BurnsideElement:
        """拉回 1-形式的指标，组装方式同商向量场"""
        return IndexService.index_from_quotient(data)

    @staticmethod
    def fixed_set_data(
        group: FiniteGroup,
        per_subgroup: Mapping[str | int | Subgroup, int],
        per_class: Mapping[SubgroupRef, int] | None = None,
    ) -> FixedSetIndexData:
        """
        收集不动点集指标，缺省的子群取其共轭子群的值

        :param group:
        :param per_subgroup: 键为子群标签、子群下标或 Subgroup
        :param per_class: 键为共轭类引用
        :return:
        """
        lattice = group_service.build_lattice(group)
        values: dict[int, int] = {}
        for ref, v in per_subgroup.items():
            match ref:
                case str():
                    i = lattice.find(ref)
                case Subgroup():
                    i = lattice.index_of(ref)
                case int() if 0 <= ref < lattice.size:
                    i = ref
                case _:
                    raise errors.UnknownClassError(msg=f'Unknown subgroup {ref!r}')
            values[i] = int(v)
        out = []
        for i in range(lattice.size):
            if i in values:
                out.append(values[i])
                continue
            given = [values[k] for k in lattice.classes[lattice.class_of[i]] if k in values]
            if not given:
                raise errors.InconsistentDataError(msg=f'No fixed-set index for {lattice.label(i)} or its conjugates')
            out.append(given[0])
        classes = None
        if per_class is not None:
            known = {burnside_service.class_of(group, ref): int(v) for ref, v in per_class.items()}
            missing = [lattice.class_label(c) for c in range(lattice.class_count) if c not in known]
            if missing:
                raise errors.InconsistentDataError(msg=f'No class index for {", ".join(missing)}')
            classes = tuple(known[c] for c in range(lattice.class_count))
        return FixedSetIndexData(group=group, per_subgroup=tuple(out), per_class=classes)

    @staticmethod
    def fixed_indices_from_index(b: BurnsideElement) -> FixedSetIndexData:
        """
        由指标求各不动点集指标

        ind(V^H) = sum_{K ⊇ H} a_[K] |N_G(K)|/|K|
        ind(V^[H]) = sum_{[K] >= [H]} a_[K] |G|/|K|

        :param b:
        :return:
        """
        group = b.group
        lattice = group_service.build_lattice(group)
        weight = [
            Fraction(b.coeffs[lattice.class_of[k]] * lattice.normalizer_order(k), lattice.subgroups[k].order)
            for k in range(lattice.size)
        ]
        per_subgroup = tuple(
            _integral(sum((weight[k] for k in range(h, lattice.size) if lattice.leq[h, k]), Fraction(0)), 'fixed index')
            for h in range(lattice.size)
        )
        per_class = tuple(
            sum(
                b.coeffs[k] * (group.order // lattice.representative(k).order)
                for k in range(lattice.class_count)
                if lattice.zeta_conj[h, k]
            )
            for h in range(lattice.class_count)
        )
        return FixedSetIndexData(group=group, per_subgroup=per_subgroup, per_class=per_class)

    @staticmethod
    def _invert_conj(data: FixedSetIndexData) -> BurnsideElement:
        group = data.group
        lattice = group_service.build_lattice(group)
        coeffs = {}
        for h in range(lattice.class_count):
            total = sum(int(lattice.mu_conj[h, k]) * data.per_class[k] for k in range(h, lattice.class_count))
            coeffs[h] = _integral(
                Fraction(lattice.representative(h).order * total, group.order), f'coefficient of {lattice.class_label(h)}'
            )
        return burnside_service.from_coefficients(group, coeffs)

    @staticmethod
    def _invert_sub(data: FixedSetIndexData) -> BurnsideElement:
        group = data.group
        lattice = group_service.build_lattice(group)
        for members in lattice.classes:
            if len({data.per_subgroup[i] for i in members}) > 1:
                raise errors.InconsistentDataError(
                    msg=f'Fixed-set indices differ across the class of {lattice.label(members[0])}'
                )
        coeffs = {}
        for c, members in enumerate(lattice.classes):
            h = members[0]
            total = sum(int(lattice.mu_sub[h, k]) * data.per_subgroup[k] for k in range(h, lattice.size) if lattice.leq[h, k])
            coeffs[c] = _integral(
                Fraction(lattice.subgroups[h].order * total, lattice.normalizer_order(h)),
                f'coefficient of {lattice.label(h)}',
            )
        return burnside_service.from_coefficients(group, coeffs)

    @staticmethod
    def index_from_fixed_indices(
        data: FixedSetIndexData, flavor: InversionFlavor = InversionFlavor.both
    ) -> BurnsideElement:
        """
        对不动点集指标做 Moebius 反演

        conj 在 ConjSub(G) 上用 ``per_class``，sub 在 Sub(G) 上用 ``per_subgroup``，
        both 计算数据支持的全部方式并要求结果一致

        :param data:
        :param flavor:
        :return:
        """
        results = {}
        if flavor in (InversionFlavor.sub, InversionFlavor.both):
            results[InversionFlavor.sub] = IndexService._invert_sub(data)
        if flavor in (InversionFlavor.conj, InversionFlavor.both):
            if data.per_class is None:
                if flavor == InversionFlavor.conj:
                    raise errors.InputError(msg='The conj flavor needs per_class data', path='per_class')
            else:
                results[InversionFlavor.conj] = IndexService._invert_conj(data)
        values = list(results.values())
        if any(v != values[0] for v in values[1:]):
            log.warning(f'inversions disagree over {data.group.name}: {results}')
            raise errors.InconsistentDataError(msg='The ConjSub and Sub inversions disagree')
        if flavor == InversionFlavor.both and len(values) == 2:
            # per_subgroup and per_class must also describe the same index
            forward = IndexService.fixed_indices_from_index(values[0])
            if forward.per_subgroup != data.per_subgroup:
                raise errors.InconsistentDataError(msg='per_subgroup and per_class describe different indices')
        return values[0]

    @staticmethod
    def index_from_form_dims(
        group: FiniteGroup, dims: Mapping[int, int], fixed_dims: Mapping[int, int]
    ) -> BurnsideElement:
        """
        由不动子空间上的代数维数求全纯 1-形式的径向指标

        :param group:
        :param dims: 子群下标 -> dim Omega_{V^K, omega}
        :param fixed_dims: 子群下标 -> n_K = dim V^K
        :return:
        """
        lattice = group_service.build_lattice(group)
        per_subgroup = []
        for k in range(lattice.size):
            if k not in dims or k not in fixed_dims:
                raise errors.MissingDimensionError(msg=f'No dimension entry for {lattice.label(k)}')
            per_subgroup.append((-1) ** fixed_dims[k] * dims[k])
        data = FixedSetIndexData(group=group, per_subgroup=tuple(per_subgroup))
        return IndexService.index_from_fixed_indices(data, InversionFlavor.sub)

    @staticmethod
    def orbit_datum(group: FiniteGroup, isotropy: Subgroup | Iterable[int], local: Mapping[SubgroupRef, int]) -> SingularOrbitDatum:
        """
        :param group:
        :param isotropy: G_p
        :param local: 局部指标系数，键为 G_p 子群格中的引用
        :return:
        """
        h = group_service.as_subgroup(group, isotropy)
        sub = group_service.subgroup_as_group(group, h)
        return SingularOrbitDatum(isotropy=h, local_index=burnside_service.from_coefficients(sub, local))

    @staticmethod
    def induce_orbit_index(datum: SingularOrbitDatum, group: FiniteGroup) -> BurnsideElement:
        """奇异轨道的贡献 I^G_{G_p}(ind^{G_p})"""
        h = group_service.as_subgroup(group, datum.isotropy)
        if datum.local_index.group is not group_service.subgroup_as_group(group, h):
            raise errors.GroupMismatchError(msg='Local index does not live over the isotropy subgroup')
        return burnside_service.induce(datum.local_index, group)

    @staticmethod
    def poincare_hopf_check(chi: BurnsideElement, orbits: Iterable[SingularOrbitDatum]) -> PoincareHopfReport:
        """
        比较诱导轨道指标之和与 chi^G

        :param chi: 空间的 chi^G
        :param orbits: 向量场的奇异轨道
        :return:
        """
        total = burnside_service.zero(chi.group)
        for datum in orbits:
            total = total + IndexService.induce_orbit_index(datum, chi.group)
        discrepancy = total - chi
        passed = discrepancy.is_zero()
        if not passed:
            log.info(f'Poincare-Hopf check failed over {chi.group.name}: discrepancy {discrepancy.coeffs}')
        return PoincareHopfReport(passed=passed, total=total, expected=chi, discrepancy=discrepancy)

    @staticmethod
    def gsv_poincare_hopf_check(chi_smoothing: BurnsideElement, orbits: Iterable[SingularOrbitDatum]) -> PoincareHopfReport:
        return IndexService.poincare_hopf_check(chi_smoothing, orbits)

    @staticmethod
    def orbit_data_from_complex(X: GSimplicialComplex) -> list[SingularOrbitDatum]:
        """
        正则复形重心向量场的奇异轨道，每个单形轨道一个，指标 (-1)^dim

        :param X:
        :return:
        """
        gspace_service.require_regular(X)
        out = []
        for simplex, stab in gspace_service.simplex_orbits(X):
            sub = group_service.subgroup_as_group(X.group, stab)
            sign = 1 if len(simplex) % 2 else -1
            out.append(SingularOrbitDatum(isotropy=stab, local_index=sign * burnside_service.one(sub)))
        return out

    @staticmethod
    def gsv_from_radial(ind_rad: BurnsideElement, chibar_milnor: BurnsideElement) -> BurnsideElement:
        """ind_GSV = ind_rad + Milnor 纤维的约化 chi^G"""
        return ind_rad + chibar_milnor

    @staticmethod
    def gsv_assemble_from_dims(
        group: FiniteGroup, dims: Mapping[int, int], fixed_dims: Mapping[int, int], k: int
    ) -> BurnsideElement:
        """
        由不动子空间上 Omega 的维数求等变 GSV 指标

        a_[H] = (|H|/|N_G(H)|) sum_{K ⊇ H, n_K > k} mu'(H, K) (-1)^(n_K - k) dims(K)

        :param group:
        :param dims: 子群下标 -> dim Omega_{V^K, omega}，n_K > k 处必填
        :param fixed_dims: 子群下标 -> n_K，全部子群必填
        :param k: 完全交的维数
        :return:
        """
        lattice = group_service.build_lattice(group)
        for i in range(lattice.size):
            if i not in fixed_dims:
                raise errors.MissingDimensionError(msg=f'No fixed-space dimension for {lattice.label(i)}')
            if fixed_dims[i] > k and i not in dims:
                raise errors.MissingDimensionError(msg=f'No dimension of Omega for {lattice.label(i)}')
        coeffs = {}
        for c, members in enumerate(lattice.classes):
            h = members[0]
            total = sum(
                int(lattice.mu_sub[h, j]) * (-1) ** (fixed_dims[j] - k) * dims[j]
                for j in range(h, lattice.size)
                if lattice.leq[h, j] and fixed_dims[j] > k
            )
            coeffs[c] = _integral(
                Fraction(lattice.subgroups[h].order * total, lattice.normalizer_order(h)),
                f'GSV coefficient of {lattice.label(h)}',
            )
        return burnside_service.from_coefficients(group, coeffs)

    @staticmethod
    def equivariant_milnor(chibar: BurnsideElement, n: int) -> BurnsideElement:
        """mu^G = (-1)^(n-1) chibar^G(M_f)"""
        return chibar if n % 2 else -chibar

    @staticmethod
    def higher_order_index(b: BurnsideElement, k: int) -> int:
        return burnside_service.r_k(b, k)

    @staticmethod
    def orbifold_index(b: BurnsideElement) -> int:
        return burnside_service.r_k(b, 1)


index_service = IndexService()
