#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from itertools import combinations

from backend.app.equivariant.model.burnside import BurnsideElement
from backend.app.equivariant.model.group import FiniteGroup, Subgroup
from backend.app.equivariant.model.gspace import GSimplicialComplex, Simplex, StratifiedGData
from backend.app.equivariant.schema.group import PermPresentationParam
from backend.app.equivariant.services.burnside_service import SubgroupRef, burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.common.exception.exception import errors
from backend.common.log import log


def _close_downward(facets: Iterable[Iterable[int]]) -> tuple[Simplex, ...]:
    faces: set[Simplex] = set()
    for facet in facets:
        top = tuple(sorted(set(facet)))
        for d in range(1, len(top) + 1):
            faces.update(combinations(top, d))
    return tuple(sorted(faces, key=lambda s: (len(s), s)))


class GSpaceService:
    @staticmethod
    def stratified_data(group: FiniteGroup, strata: Iterable[tuple[SubgroupRef, int]]) -> StratifiedGData:
        return StratifiedGData(
            group=group,
            strata=tuple((burnside_service.class_of(group, ref), int(chi)) for ref, chi in strata),
        )

    @staticmethod
    def chi_G_stratified(data: StratifiedGData) -> BurnsideElement:
        """chi^G(V) = sum chi(V^([H])/G) [G/H]"""
        return burnside_service.from_coefficients(data.group, _accumulate(data.strata))

    @staticmethod
    def reduced_chi_G(chi: BurnsideElement) -> BurnsideElement:
        return burnside_service.reduced(chi)

    @staticmethod
    def chi_G_from_fixed(group: FiniteGroup, chi_fixed: Mapping[int, int]) -> BurnsideElement:
        """
        由各不动点集的 Euler 示性数求 chi^G

        :param group:
        :param chi_fixed: 子群下标 -> chi(V^H)，须覆盖全部子群
        :return:
        """
        lattice = group_service.build_lattice(group)
        missing = [lattice.label(i) for i in range(lattice.size) if i not in chi_fixed]
        if missing:
            raise errors.InconsistentDataError(msg=f'Fixed point data missing for {", ".join(missing)}')
        for members in lattice.classes:
            if len({chi_fixed[i] for i in members}) > 1:
                raise errors.InconsistentDataError(
                    msg=f'Fixed point data differs across the class of {lattice.label(members[0])}'
                )
        coeffs = {}
        for c, members in enumerate(lattice.classes):
            h = members[0]
            exact = sum(int(lattice.mu_sub[h, k]) * chi_fixed[k] for k in range(h, lattice.size) if lattice.leq[h, k])
            value = Fraction(exact * lattice.subgroups[h].order, lattice.normalizer_order(h))
            if value.denominator != 1:
                log.error(f'orbit count {value} of {lattice.label(h)} over {group.name} is not integral')
                raise errors.IntegralityError(msg=f'Orbit count at {lattice.label(h)} is {value}')
            coeffs[c] = int(value)
        return burnside_service.from_coefficients(group, coeffs)

    @staticmethod
    def complex_from_action(
        vertices: Sequence[int | str],
        simplices: Iterable[Iterable[int | str]],
        generators: Mapping[str, Sequence[int | str]] | Sequence[Sequence[int | str]] = (),
    ) -> GSimplicialComplex:
        """
        由顶点置换生成群并构造 G-复形

        :param vertices: 顶点 id
        :param simplices: 极大单形，面自动补齐
        :param generators: 每个生成元下各顶点的像，按 ``vertices`` 顺序
        :return:
        """
        labels = tuple(str(v) for v in vertices)
        if len(set(labels)) != len(labels):
            raise errors.InputError(msg='Vertex ids are not distinct', path='vertices')
        position = {v: i for i, v in enumerate(labels)}

        def locate(v, where: str) -> int:
            try:
                return position[str(v)]
            except KeyError:
                raise errors.InputError(msg=f'Unknown vertex {v!r}', path=where)

        faces = _close_downward([locate(v, 'simplices') for v in s] for s in simplices)
        faces = tuple(sorted(set(faces) | {(i,) for i in range(len(labels))}, key=lambda s: (len(s), s)))
        items = generators.items() if isinstance(generators, Mapping) else enumerate(generators)
        perms = []
        for name, images in items:
            if len(images) != len(labels):
                raise errors.GroupPresentationError(msg=f'Generator {name} has {len(images)} images for {len(labels)} vertices')
            perms.append([locate(v, f'action.{name}') for v in images])
        # a permutation of positions always contains 0, so it is read as 0-based
        presentation = PermPresentationParam(kind='perm', degree=len(labels), generators=perms)
        group = group_service.build_group(presentation, degree_limit=max(len(labels), 1))
        complex_ = GSimplicialComplex(group=group, labels=labels, simplices=faces, action=tuple(group.elements))
        GSpaceService._check_invariant(complex_)
        return complex_

    @staticmethod
    def _check_invariant(X: GSimplicialComplex) -> None:
        for g in X.group.generators:
            for s in X.simplices:
                if X.image(g, s) not in X.simplex_set:
                    raise errors.GroupPresentationError(msg=f'The action does not map the simplex {s} to a simplex')

    @staticmethod
    def with_group(X: GSimplicialComplex, group: FiniteGroup, action: Sequence[Sequence[int]]) -> GSimplicialComplex:
        """换一个群作用在同一复形上"""
        action = tuple(tuple(int(x) for x in p) for p in action)
        if len(action) != group.order:
            raise errors.GroupPresentationError(msg=f'Need one vertex permutation per element of {group.name}')
        t = group.table
        for a in range(group.order):
            for b in range(group.order):
                if action[int(t[a, b])] != tuple(action[a][x] for x in action[b]):
                    raise errors.GroupPresentationError(msg='Vertex action is not a homomorphism')
        complex_ = GSimplicialComplex(group=group, labels=X.labels, simplices=X.simplices, action=action)
        for g in range(group.order):
            for s in complex_.simplices:
                if complex_.image(g, s) not in complex_.simplex_set:
                    raise errors.GroupPresentationError(msg=f'The action does not map the simplex {s} to a simplex')
        return complex_

    @staticmethod
    def euler_characteristic(X: GSimplicialComplex) -> int:
        return sum(1 if len(s) % 2 else -1 for s in X.simplices)

    @staticmethod
    def is_regular(X: GSimplicialComplex) -> bool:
        for g in range(X.group.order):
            perm = X.action[g]
            for s in X.simplices:
                if X.image(g, s) == s and any(perm[v] != v for v in s):
                    return False
        return True

    @staticmethod
    def require_regular(X: GSimplicialComplex) -> None:
        if not GSpaceService.is_regular(X):
            raise errors.RegularityError()

    @staticmethod
    def stabilizer(X: GSimplicialComplex, simplex: Simplex) -> Subgroup:
        return Subgroup(X.group, frozenset(g for g in range(X.group.order) if X.image(g, simplex) == simplex))

    @staticmethod
    def simplex_orbits(X: GSimplicialComplex) -> list[tuple[Simplex, Subgroup]]:
        seen: set[Simplex] = set()
        orbits = []
        for s in X.simplices:
            if s in seen:
                continue
            seen.update(X.image(g, s) for g in range(X.group.order))
            orbits.append((s, GSpaceService.stabilizer(X, s)))
        return orbits

    @staticmethod
    def orbit_types(X: GSimplicialComplex) -> StratifiedGData:
        """轨道型分解，每个单形轨道对其迷向类贡献 (-1)^dim"""
        GSpaceService.require_regular(X)
        lattice = group_service.build_lattice(X.group)
        strata: dict[int, int] = {}
        for s, stab in GSpaceService.simplex_orbits(X):
            c = lattice.class_index(stab)
            strata[c] = strata.get(c, 0) + (1 if len(s) % 2 else -1)
        return StratifiedGData(group=X.group, strata=tuple(sorted(strata.items())))

    @staticmethod
    def chi_G_simplicial(X: GSimplicialComplex) -> BurnsideElement:
        return GSpaceService.chi_G_stratified(GSpaceService.orbit_types(X))

    @staticmethod
    def fixed_subcomplex(X: GSimplicialComplex, subgroup: Subgroup | Iterable[int]) -> GSimplicialComplex:
        """X^H，作用平凡"""
        GSpaceService.require_regular(X)
        h = group_service.as_subgroup(X.group, subgroup)
        fixed_vertices = [v for v in range(X.vertex_count) if all(X.action[g][v] == v for g in h.members)]
        local = {v: i for i, v in enumerate(fixed_vertices)}
        faces = tuple(tuple(local[v] for v in s) for s in X.simplices if all(v in local for v in s))
        trivial = group_service.trivial_group(len(fixed_vertices))
        return GSimplicialComplex(
            group=trivial,
            labels=tuple(X.labels[v] for v in fixed_vertices),
            simplices=faces,
            action=(tuple(range(len(fixed_vertices))),),
        )

    @staticmethod
    def barycentric_subdivide(X: GSimplicialComplex) -> GSimplicialComplex:
        """重心重分，顶点为 X 的单形，单形为面的链"""
        faces = X.simplices
        position = {s: i for i, s in enumerate(faces)}
        covers: dict[int, list[int]] = {i: [] for i in range(len(faces))}
        for i, s in enumerate(faces):
            for j, t in enumerate(faces):
                if len(t) > len(s) and set(s) <= set(t):
                    covers[i].append(j)
        chains: list[Simplex] = []
        stack = [(i,) for i in range(len(faces))]
        while stack:
            chain = stack.pop()
            chains.append(chain)
            stack.extend(chain + (j,) for j in covers[chain[-1]])
        simplices = tuple(sorted((tuple(sorted(c)) for c in chains), key=lambda s: (len(s), s)))
        action = tuple(tuple(position[X.image(g, s)] for s in faces) for g in range(X.group.order))
        labels = tuple('+'.join(X.labels[v] for v in s) for s in faces)
        log.debug(f'subdivided {len(faces)} simplices into {len(simplices)}')
        return GSimplicialComplex(group=X.group, labels=labels, simplices=simplices, action=action)

    @staticmethod
    def disjoint_union(X: GSimplicialComplex, Y: GSimplicialComplex) -> GSimplicialComplex:
        if X.group is not Y.group:
            raise errors.GroupMismatchError(msg='Disjoint union needs both complexes over the same group')
        shift = X.vertex_count
        simplices = X.simplices + tuple(tuple(v + shift for v in s) for s in Y.simplices)
        return GSimplicialComplex(
            group=X.group,
            labels=tuple(f'0:{v}' for v in X.labels) + tuple(f'1:{v}' for v in Y.labels),
            simplices=tuple(sorted(simplices, key=lambda s: (len(s), s))),
            action=tuple(a + tuple(v + shift for v in b) for a, b in zip(X.action, Y.action)),
        )

    @staticmethod
    def chi_k_direct(X: GSimplicialComplex, k: int) -> int:
        """按定义对交换 (k+1) 元组求和的 chi^(k)"""
        GSpaceService.require_regular(X)
        group = X.group
        lattice = group_service.build_lattice(group)
        counts = burnside_service.tuple_counts(group, k)
        total = 0
        for i, count in counts.items():
            fixed = GSpaceService.fixed_subcomplex(X, lattice.subgroups[i])
            total += count * GSpaceService.euler_characteristic(fixed)
        value = Fraction(total, group.order)
        if value.denominator != 1:
            raise errors.IntegralityError(msg=f'chi^({k}) is not an integer: {value}')
        return int(value)

    @staticmethod
    def chi_orbifold_direct(X: GSimplicialComplex) -> int:
        return GSpaceService.chi_k_direct(X, 1)


def _accumulate(pairs: Iterable[tuple[int, int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for c, v in pairs:
        out[c] = out.get(c, 0) + v
    return out


gspace_service = GSpaceService()
