#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

import time

from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache

import numpy as np

from backend.app.equivariant.model.group import Element, FiniteGroup, Subgroup, SubgroupLattice
from backend.app.equivariant.schema.group import (
    DiagonalPresentationParam,
    GroupPresentationParam,
    PermPresentationParam,
    TablePresentationParam,
)
from backend.common.enums import PresentationKind
from backend.common.exception.exception import errors
from backend.common.log import log
from backend.core.config import settings


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply q first, then p
    return tuple(p[i] for i in q)


def _add_phases(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    return tuple((x + y) % 1 for x, y in zip(a, b))


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class GroupService:
    @staticmethod
    def build_group(presentation: GroupPresentationParam, *, degree_limit: int | None = None) -> FiniteGroup:
        """
        由表示枚举群

        :param presentation: 置换、对角相位或乘法表
        :param degree_limit: 覆盖 settings.max_perm_degree
        :return:
        """
        match presentation:
            case PermPresentationParam():
                group = GroupService._build_perm(presentation, degree_limit or settings.max_perm_degree)
            case DiagonalPresentationParam():
                group = GroupService._build_diagonal(presentation)
            case TablePresentationParam():
                group = GroupService._build_table(presentation)
            case _:
                raise errors.GroupPresentationError(msg=f'Unsupported presentation: {presentation!r}')
        GroupService._audit_associativity(group)
        log.debug(f'built {group.name} of order {group.order}')
        return group

    @staticmethod
    def _build_perm(presentation: PermPresentationParam, degree_limit: int) -> FiniteGroup:
        m = presentation.degree
        if m > degree_limit:
            raise errors.BoundExceededError(msg=f'Permutation degree {m} exceeds {degree_limit}')
        one_based = all(0 not in g for g in presentation.generators) and len(presentation.generators) > 0 and m > 0
        generators = []
        for images in presentation.generators:
            perm = tuple(i - 1 for i in images) if one_based else tuple(images)
            if len(perm) != m or sorted(perm) != list(range(m)):
                raise errors.GroupPresentationError(
                    msg=f'Generator {images} is not an invertible map of {m} points'
                )
            generators.append(perm)
        identity = tuple(range(m))
        elements = GroupService._close(identity, generators, _compose)
        return GroupService._assemble(f'perm({m}):{len(elements)}', PresentationKind.perm, m, elements, generators, _compose)

    @staticmethod
    def _build_diagonal(presentation: DiagonalPresentationParam) -> FiniteGroup:
        widths = {len(g) for g in presentation.phases}
        n = widths.pop() if widths else (presentation.dimension or 0)
        if presentation.dimension is not None and presentation.dimension != n:
            raise errors.GroupPresentationError(msg=f'Phase vectors have length {n}, expected {presentation.dimension}')
        generators = []
        for g in presentation.phases:
            phase = tuple(Fraction(num, den) % 1 for num, den in g)
            for x in phase:
                if x.denominator > settings.max_phase_denominator:
                    raise errors.BoundExceededError(
                        msg=f'Phase denominator {x.denominator} exceeds {settings.max_phase_denominator}'
                    )
            generators.append(phase)
        identity = tuple(Fraction(0) for _ in range(n))
        elements = GroupService._close(identity, generators, _add_phases)
        return GroupService._assemble(
            f'diagonal({n}):{len(elements)}', PresentationKind.diagonal, n, elements, generators, _add_phases
        )

    @staticmethod
    def _build_table(presentation: TablePresentationParam) -> FiniteGroup:
        raw = presentation.table
        n = len(raw)
        if n == 0:
            raise errors.GroupPresentationError(msg='Empty multiplication table')
        if n > settings.max_group_order:
            raise errors.BoundExceededError(msg=f'Group order {n} exceeds {settings.max_group_order}')
        if any(len(row) != n or any(not 0 <= x < n for x in row) for row in raw):
            raise errors.GroupPresentationError(msg='Multiplication table is not closed')
        units = [e for e in range(n) if all(raw[e][x] == x and raw[x][e] == x for x in range(n))]
        if not units:
            raise errors.GroupPresentationError(msg='Multiplication table has no identity')
        e = units[0]
        for a in range(n):
            if not any(raw[a][b] == e and raw[b][a] == e for b in range(n)):
                raise errors.GroupPresentationError(msg=f'Element {a} has no inverse')
        # identity first, then ids in increasing order
        order = [e] + [x for x in range(n) if x != e]
        position = {x: i for i, x in enumerate(order)}
        table = np.array([[position[raw[a][b]] for b in order] for a in order], dtype=np.int64)
        inverse = tuple(int(np.flatnonzero(table[a] == 0)[0]) for a in range(n))
        return FiniteGroup(
            name=f'table:{n}',
            kind=PresentationKind.table,
            degree=0,
            elements=tuple(order),
            table=_readonly(table),
            inverse=inverse,
            generators=tuple(range(1, n)),
        )

    @staticmethod
    def _close(identity: Element, generators: list, compose) -> list:
        """生成元在乘法下的闭包"""
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in generators:
                    y = compose(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > settings.max_group_order:
                            raise errors.BoundExceededError(
                                msg=f'Generated group exceeds order {settings.max_group_order}'
                            )
            frontier = nxt
        return sorted(seen)

    @staticmethod
    def _assemble(name: str, kind: PresentationKind, degree: int, elements: list, generators: list, compose) -> FiniteGroup:
        # sorted payloads put the identity first for both permutations and phases
        position = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        table = np.empty((n, n), dtype=np.int64)
        for a, x in enumerate(elements):
            table[a] = [position[compose(x, y)] for y in elements]
        inverse = tuple(int(np.flatnonzero(table[a] == 0)[0]) for a in range(n))
        return FiniteGroup(
            name=name,
            kind=kind,
            degree=degree,
            elements=tuple(elements),
            table=_readonly(table),
            inverse=inverse,
            generators=tuple(sorted({position[g] for g in generators})),
        )

    @staticmethod
    def _audit_associativity(group: FiniteGroup) -> None:
        t = group.table
        n = group.order
        if n <= settings.assoc_exhaustive_order:
            lhs = t[t]
            rhs = t[np.arange(n)[:, None, None], t[None, :, :]]
            ok = bool(np.array_equal(lhs, rhs))
        else:
            rng = np.random.default_rng(settings.assoc_seed)
            a, b, c = rng.integers(0, n, size=(3, settings.assoc_samples))
            ok = bool(np.array_equal(t[t[a, b], c], t[a, t[b, c]]))
        if not ok:
            raise errors.GroupPresentationError(msg=f'Multiplication of {group.name} is not associative')

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def trivial_group(degree: int = 0) -> FiniteGroup:
        return GroupService.build_group(
            PermPresentationParam(kind='perm', degree=degree, generators=[]), degree_limit=max(degree, 1)
        )

    @staticmethod
    def is_abelian(group: FiniteGroup) -> bool:
        return bool(np.array_equal(group.table, group.table.T))

    @staticmethod
    def closure(group: FiniteGroup, elements: Iterable[int]) -> frozenset[int]:
        gens = sorted(set(elements))
        seen = {group.identity}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(group.table[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    @staticmethod
    def generated_subgroup(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
        return Subgroup(group, GroupService.closure(group, elements))

    @staticmethod
    def as_subgroup(group: FiniteGroup, members: Iterable[int] | Subgroup) -> Subgroup:
        """校验元素集合是否为子群"""
        if isinstance(members, Subgroup):
            if members.group is not group:
                raise errors.NotASubgroupError(msg=f'Subgroup belongs to {members.group.name}, not {group.name}')
            return members
        members = frozenset(int(x) for x in members)
        if any(not 0 <= x < group.order for x in members):
            raise errors.NotASubgroupError(msg=f'{sorted(members)} contains ids outside {group.name}')
        if group.identity not in members:
            raise errors.NotASubgroupError(msg=f'{sorted(members)} does not contain the identity')
        for a in members:
            if group.inverse[a] not in members:
                raise errors.NotASubgroupError(msg=f'{sorted(members)} is not closed under inverses')
            for b in members:
                if int(group.table[a, b]) not in members:
                    raise errors.NotASubgroupError(msg=f'{sorted(members)} is not closed under multiplication')
        return Subgroup(group, members)

    @staticmethod
    def conjugate(group: FiniteGroup, subgroup: Subgroup, g: int) -> frozenset[int]:
        row = group.conjugation[g]
        return frozenset(int(row[h]) for h in subgroup.members)

    @staticmethod
    def normalizer(group: FiniteGroup, subgroup: Subgroup | Iterable[int]) -> Subgroup:
        """N_G(H)"""
        h = GroupService.as_subgroup(group, subgroup)
        members = frozenset(g for g in range(group.order) if GroupService.conjugate(group, h, g) == h.members)
        return Subgroup(group, members)

    @staticmethod
    def centralizer(group: FiniteGroup, subgroup: Subgroup | Iterable[int]) -> Subgroup:
        h = GroupService.as_subgroup(group, subgroup)
        t = group.table
        members = frozenset(g for g in range(group.order) if all(t[g, x] == t[x, g] for x in h.members))
        return Subgroup(group, members)

    @staticmethod
    def element_classes(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
        """元素共轭类，按最小成员排序"""
        seen: set[int] = set()
        classes = []
        conj = group.conjugation
        for x in range(group.order):
            if x in seen:
                continue
            cls = tuple(sorted({int(v) for v in conj[:, x]}))
            seen.update(cls)
            classes.append(cls)
        return tuple(classes)

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def build_lattice(group: FiniteGroup) -> SubgroupLattice:
        """
        子群格：循环子群在 join 下闭包得到全部子群，并计算共轭类、正规化子和两张 Moebius 表

        :param group:
        :return:
        """
        if group.order > settings.max_group_order:
            raise errors.BoundExceededError(msg=f'Group order {group.order} exceeds {settings.max_group_order}')
        started = time.perf_counter()
        closure = GroupService.closure
        cyclic = {closure(group, [g]) for g in range(group.order)}
        cyclic_gens = {}
        for g in range(group.order):
            cyclic_gens.setdefault(closure(group, [g]), g)
        found = set(cyclic)
        frontier = list(cyclic)
        while frontier:
            nxt = []
            for h in frontier:
                for c, g in cyclic_gens.items():
                    if c <= h:
                        continue
                    j = closure(group, list(h) + [g])
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        subgroups = sorted((Subgroup(group, m) for m in found), key=lambda s: s.sort_key)
        s = len(subgroups)
        index = {h.members: i for i, h in enumerate(subgroups)}

        leq = np.zeros((s, s), dtype=bool)
        for i, h in enumerate(subgroups):
            for j in range(i, s):
                leq[i, j] = h.members <= subgroups[j].members

        # conjugacy classes; the first unassigned subgroup is minimal in its class
        class_of = [-1] * s
        classes = []
        normalizers = []
        for i, h in enumerate(subgroups):
            conjugates = [index[GroupService.conjugate(group, h, g)] for g in range(group.order)]
            normalizers.append(Subgroup(group, frozenset(g for g, k in enumerate(conjugates) if k == i)))
            if class_of[i] >= 0:
                continue
            members = tuple(sorted(set(conjugates)))
            for k in members:
                class_of[k] = len(classes)
            classes.append(members)

        mu_sub = GroupService._moebius(leq)
        c = len(classes)
        zeta_conj = np.zeros((c, c), dtype=np.int64)
        for a, ca in enumerate(classes):
            for b, cb in enumerate(classes):
                zeta_conj[a, b] = int(any(leq[ca[0], k] for k in cb))
        mu_conj = GroupService._moebius(zeta_conj.astype(bool))

        lattice = SubgroupLattice(
            group=group,
            subgroups=tuple(subgroups),
            leq=_readonly(leq),
            classes=tuple(classes),
            class_of=tuple(class_of),
            normalizers=tuple(normalizers),
            mu_sub=_readonly(mu_sub),
            zeta_conj=_readonly(zeta_conj),
            mu_conj=_readonly(mu_conj),
        )
        log.debug(
            f'lattice of {group.name}: {s} subgroups, {c} classes in {time.perf_counter() - started:.3f}s'
        )
        return lattice

    @staticmethod
    def _moebius(leq: np.ndarray) -> np.ndarray:
        """拓扑序偏序矩阵的 Moebius 函数"""
        n = leq.shape[0]
        zeta = leq.astype(np.int64)
        mu = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            mu[i, i] = 1
            for j in range(i + 1, n):
                if leq[i, j]:
                    mu[i, j] = -int(mu[i, :j] @ zeta[:j, j])
        return mu

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def _cut_out(group: FiniteGroup, members: frozenset[int]) -> FiniteGroup:
        lattice = GroupService.build_lattice(group)
        positions = tuple(sorted(members))
        local = {g: i for i, g in enumerate(positions)}
        table = np.array([[local[int(group.table[a, b])] for b in positions] for a in positions], dtype=np.int64)
        inverse = tuple(local[group.inverse[a]] for a in positions)
        return FiniteGroup(
            name=f'{group.name}|{lattice.label(lattice.index_of(members))}',
            kind=group.kind,
            degree=group.degree,
            elements=tuple(group.elements[a] for a in positions),
            table=_readonly(table),
            inverse=inverse,
            generators=tuple(range(1, len(positions))),
            parent=group,
            embedding=positions,
        )

    @staticmethod
    def subgroup_as_group(group: FiniteGroup, subgroup: Subgroup | Iterable[int]) -> FiniteGroup:
        """
        把子群切出为独立的群，H = G 时返回 G 本身

        结果有缓存，重复调用返回同一对象

        :param group:
        :param subgroup:
        :return:
        """
        h = GroupService.as_subgroup(group, subgroup)
        if h.order == group.order:
            return group
        return GroupService._cut_out(group, h.members)

    @staticmethod
    def to_parent(sub: FiniteGroup, members: Iterable[int]) -> frozenset[int]:
        if sub.embedding is None:
            return frozenset(members)
        return frozenset(sub.embedding[x] for x in members)


group_service = GroupService()
