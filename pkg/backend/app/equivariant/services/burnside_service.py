#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache

import numpy as np

from backend.app.equivariant.model.burnside import BurnsideElement, ClassFunction, TableOfMarks
from backend.app.equivariant.model.group import FiniteGroup, Subgroup
from backend.app.equivariant.services.group_service import group_service
from backend.common.exception.exception import errors
from backend.common.log import log
from backend.core.config import settings

SubgroupRef = int | str | Subgroup | frozenset


class BurnsideService:
    @staticmethod
    def class_of(group: FiniteGroup, ref: SubgroupRef) -> int:
        """
        子群引用所在的共轭类下标

        :param group:
        :param ref: 类下标、子群标签、Subgroup 或成员集合
        :return:
        """
        lattice = group_service.build_lattice(group)
        if isinstance(ref, bool):
            raise errors.UnknownClassError(msg=f'Unknown class {ref!r}')
        if isinstance(ref, int):
            if not 0 <= ref < lattice.class_count:
                raise errors.UnknownClassError(msg=f'Class index {ref} out of range for {group.name}')
            return ref
        if isinstance(ref, str):
            return lattice.find_class(ref)
        if isinstance(ref, Subgroup):
            return lattice.class_index(group_service.as_subgroup(group, ref))
        return lattice.class_index(frozenset(ref))

    @staticmethod
    def zero(group: FiniteGroup) -> BurnsideElement:
        return BurnsideElement(group, (0,) * group_service.build_lattice(group).class_count)

    @staticmethod
    def basis(group: FiniteGroup, ref: SubgroupRef) -> BurnsideElement:
        """[G/H]"""
        c = BurnsideService.class_of(group, ref)
        coeffs = [0] * group_service.build_lattice(group).class_count
        coeffs[c] = 1
        return BurnsideElement(group, tuple(coeffs))

    @staticmethod
    def one(group: FiniteGroup) -> BurnsideElement:
        """单位元 [G/G]"""
        lattice = group_service.build_lattice(group)
        return BurnsideService.basis(group, lattice.class_count - 1)

    @staticmethod
    def from_coefficients(group: FiniteGroup, coeffs: Mapping[SubgroupRef, int]) -> BurnsideElement:
        """按 (子群引用, 系数) 构造元素，同一类的系数累加"""
        out = [0] * group_service.build_lattice(group).class_count
        for ref, a in coeffs.items():
            out[BurnsideService.class_of(group, ref)] += int(a)
        return BurnsideElement(group, tuple(out))

    @staticmethod
    def reduced(b: BurnsideElement) -> BurnsideElement:
        """b - [G/G]"""
        return b - BurnsideService.one(b.group)

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def table_of_marks(group: FiniteGroup) -> TableOfMarks:
        """标记表：统计满足 g^-1 H g ⊆ K 的 g，再除以 |K|"""
        lattice = group_service.build_lattice(group)
        c = lattice.class_count
        n = group.order
        # conj_inv[g, h] = g^-1 h g
        conj_inv = group.conjugation[np.asarray(group.inverse)]
        marks = np.zeros((c, c), dtype=np.int64)
        for a in range(c):
            k = lattice.representative(a)
            k_mask = np.zeros(n, dtype=bool)
            k_mask[list(k.members)] = True
            for b in range(c):
                if not lattice.zeta_conj[b, a]:
                    continue
                h = np.asarray(lattice.representative(b).sorted_members)
                fixing = int(np.count_nonzero(k_mask[conj_inv[:, h]].all(axis=1)))
                marks[a, b] = fixing // k.order
        marks.setflags(write=False)
        log.debug(f'table of marks of {group.name}: {c}x{c}')
        return TableOfMarks(group=group, lattice=lattice, marks=marks)

    @staticmethod
    def mark_vector(b: BurnsideElement) -> tuple[int, ...]:
        tom = BurnsideService.table_of_marks(b.group)
        return tuple(int(x) for x in np.asarray(b.coeffs, dtype=np.int64) @ tom.marks)

    @staticmethod
    def from_marks(group: FiniteGroup, marks: Iterable[int | Fraction]) -> BurnsideElement:
        """
        由标记向量回代求元素

        :param group:
        :param marks: 每个共轭类一个值
        :return:
        """
        tom = BurnsideService.table_of_marks(group)
        values = [Fraction(v) for v in marks]
        c = tom.lattice.class_count
        if len(values) != c:
            raise errors.InconsistentDataError(msg=f'Expected {c} marks for {group.name}, got {len(values)}')
        coeffs: list[Fraction] = [Fraction(0)] * c
        # marks[K, H] vanishes unless class H precedes or equals class K
        for h in range(c - 1, -1, -1):
            rest = sum((coeffs[k] * tom.mark(k, h) for k in range(h + 1, c)), Fraction(0))
            coeffs[h] = (values[h] - rest) / tom.mark(h, h)
        if any(a.denominator != 1 for a in coeffs):
            log.error(f'non-integral Burnside coefficients over {group.name}: {coeffs}')
            raise errors.IntegralityError(msg=f'Marks {list(map(str, values))} are not the marks of a G-set')
        return BurnsideElement(group, tuple(int(a) for a in coeffs))

    @staticmethod
    def multiply(b1: BurnsideElement, b2: BurnsideElement) -> BurnsideElement:
        """在标记空间中相乘"""
        b1._check(b2)
        m1 = BurnsideService.mark_vector(b1)
        m2 = BurnsideService.mark_vector(b2)
        return BurnsideService.from_marks(b1.group, [x * y for x, y in zip(m1, m2)])

    @staticmethod
    def cardinality(b: BurnsideElement) -> int:
        lattice = group_service.build_lattice(b.group)
        return sum(a * (b.group.order // lattice.representative(c).order) for c, a in b.support())

    @staticmethod
    def restrict(b: BurnsideElement, subgroup: Subgroup | Iterable[int]) -> BurnsideElement:
        """
        限制到子群 H

        :param b: G 上的元素
        :param subgroup: H
        :return: subgroup_as_group(G, H) 上的元素
        """
        group = b.group
        h = group_service.as_subgroup(group, subgroup)
        target = group_service.subgroup_as_group(group, h)
        lattice = group_service.build_lattice(group)
        local = {g: i for i, g in enumerate(target.embedding)} if target.embedding else None
        out = [0] * group_service.build_lattice(target).class_count
        h_members = h.sorted_members
        for c, a in b.support():
            k = lattice.representative(c)
            seen: set[frozenset[int]] = set()
            for g in range(group.order):
                coset = frozenset(int(group.table[g, x]) for x in k.members)
                if coset in seen:
                    continue
                # the H-orbit of gK
                for x in h_members:
                    seen.add(frozenset(int(group.table[x, y]) for y in coset))
                inv = group.inverse[g]
                stab = [x for x in h_members if int(group.conjugation[inv, x]) in k.members]
                if local is not None:
                    stab = [local[x] for x in stab]
                out[BurnsideService.class_of(target, frozenset(stab))] += a
        return BurnsideElement(target, tuple(out))

    @staticmethod
    def induce(b: BurnsideElement, group: FiniteGroup) -> BurnsideElement:
        """诱导 [H/K] -> [G/K]"""
        source = b.group
        if source is group:
            return b
        if source.parent is not group:
            raise errors.NotASubgroupError(msg=f'{source.name} is not a subgroup of {group.name}')
        sub_lattice = group_service.build_lattice(source)
        out = [0] * group_service.build_lattice(group).class_count
        for c, a in b.support():
            members = group_service.to_parent(source, sub_lattice.representative(c).members)
            out[BurnsideService.class_of(group, members)] += a
        return BurnsideElement(group, tuple(out))

    @staticmethod
    def check_rk_bounds(group: FiniteGroup, k: int) -> None:
        if not 0 <= k <= settings.max_rk_order:
            raise errors.BoundExceededError(msg=f'k = {k} is outside 0..{settings.max_rk_order}')
        if group.order ** (k + 1) > settings.max_rk_tuples:
            raise errors.BoundExceededError(
                msg=f'|G|^(k+1) = {group.order ** (k + 1)} exceeds {settings.max_rk_tuples}'
            )

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def tuple_counts(group: FiniteGroup, k: int) -> dict[int, int]:
        """
        两两交换的 (k+1) 元组按生成子群计数，逐位在已生成子群的中心化子中扩展

        :param group:
        :param k:
        :return: 子群下标 -> 个数
        """
        BurnsideService.check_rk_bounds(group, k)
        lattice = group_service.build_lattice(group)
        counts: dict[int, int] = {}
        for g in range(group.order):
            i = lattice.index_of(group_service.closure(group, [g]))
            counts[i] = counts.get(i, 0) + 1
        joins: dict[tuple[int, int], int] = {}
        for _ in range(k):
            grown: dict[int, int] = {}
            for i, count in counts.items():
                members = lattice.subgroups[i].members
                for g in group_service.centralizer(group, lattice.subgroups[i]).members:
                    key = (i, g)
                    if key not in joins:
                        joins[key] = i if g in members else lattice.index_of(group_service.closure(group, [*members, g]))
                    j = joins[key]
                    grown[j] = grown.get(j, 0) + count
            counts = grown
        return dict(sorted(counts.items()))

    @staticmethod
    def r_k(b: BurnsideElement, k: int) -> int:
        """r_G^(k)"""
        group = b.group
        counts = BurnsideService.tuple_counts(group, k)
        lattice = group_service.build_lattice(group)
        marks = BurnsideService.mark_vector(b)
        total = sum(count * marks[lattice.class_of[i]] for i, count in counts.items())
        value = Fraction(total, group.order)
        if value.denominator != 1:
            raise errors.IntegralityError(msg=f'r_{k} over {group.name} is not an integer: {value}')
        return int(value)

    @staticmethod
    def permutation_character(b: BurnsideElement) -> ClassFunction:
        """各元素的不动点个数"""
        group = b.group
        lattice = group_service.build_lattice(group)
        marks = BurnsideService.mark_vector(b)
        classes = group_service.element_classes(group)
        values = tuple(marks[lattice.class_index(group_service.generated_subgroup(group, [cls[0]]))] for cls in classes)
        return ClassFunction(group=group, classes=classes, values=values)


burnside_service = BurnsideService()
