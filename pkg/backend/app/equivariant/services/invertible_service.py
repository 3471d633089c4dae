#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod

from sympy import Matrix, Poly, Rational, diff, groebner, symbols

from backend.app.equivariant.model.burnside import BurnsideElement
from backend.app.equivariant.model.group import FiniteGroup, Subgroup
from backend.app.equivariant.model.polynomial import (
    BerglundHubschPair,
    Block,
    DiagonalGroup,
    DualityReport,
    DualPair,
    FixedLocusDatum,
    InvertiblePolynomial,
    MilnorData,
)
from backend.app.equivariant.schema.group import DiagonalPresentationParam
from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.gspace_service import gspace_service
from backend.app.equivariant.services.index_service import index_service
from backend.common.enums import BlockKind, PresentationKind
from backend.common.exception.exception import errors
from backend.common.log import log
from backend.core.config import settings


def _fraction(x: Rational) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _main_candidates(row: tuple[int, ...]) -> list[tuple[int, int | None]]:
    """单个单项式的 (主变量, 指向变量) 候选"""
    support = [j for j, e in enumerate(row) if e]
    if len(support) == 1:
        return [(support[0], None)]
    if len(support) == 2:
        i, j = support
        out = []
        if row[j] == 1:
            out.append((i, j))
        if row[i] == 1:
            out.append((j, i))
        return out
    return []


def _decompose(E: tuple[tuple[int, ...], ...]) -> tuple[Block, ...] | None:
    """
    把指数矩阵拆成 Fermat、chain、loop 原子，无法分配时返回 None
    """
    n = len(E)
    candidates = [_main_candidates(row) for row in E]
    mains: list[tuple[int, int | None]] = []
    used: set[int] = set()
    targets: set[int] = set()

    def search(i: int) -> bool:
        if i == n:
            return True
        for main, target in candidates[i]:
            if main in used or (target is not None and target in targets):
                continue
            used.add(main)
            if target is not None:
                targets.add(target)
            mains.append((main, target))
            if search(i + 1):
                return True
            mains.pop()
            used.discard(main)
            targets.discard(target)
        return False

    if not search(0):
        return None
    pointer = {main: target for main, target in mains}
    exponent = {main: E[i][main] for i, (main, _) in enumerate(mains)}
    pointed = {t for t in pointer.values() if t is not None}
    blocks = []
    seen: set[int] = set()
    for v in range(n):
        if v in seen or v in pointed:
            continue
        path = [v]
        while pointer[path[-1]] is not None:
            path.append(pointer[path[-1]])
        seen.update(path)
        kind = BlockKind.fermat if len(path) == 1 else BlockKind.chain
        blocks.append(Block(kind, tuple(path), tuple(exponent[x] for x in path)))
    for v in range(n):
        if v in seen:
            continue
        cycle = [v]
        while pointer[cycle[-1]] != v:
            cycle.append(pointer[cycle[-1]])
        seen.update(cycle)
        blocks.append(Block(BlockKind.loop, tuple(cycle), tuple(exponent[x] for x in cycle)))
    return tuple(sorted(blocks, key=lambda b: min(b.variables)))


class InvertibleService:
    @staticmethod
    def validate(E: Sequence[Sequence[int]]) -> InvertiblePolynomial:
        """
        校验指数矩阵并分解为原子

        :param E: 非负整数方阵，第 i 行为第 i 个单项式
        :return:
        """
        rows = tuple(tuple(int(x) for x in row) for row in E)
        return InvertibleService._validate(rows)

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def _validate(E: tuple[tuple[int, ...], ...]) -> InvertiblePolynomial:
        n = len(E)
        if any(len(row) != n for row in E):
            raise errors.InvalidPolynomialError(msg=f'Exponent matrix is not square: {[list(r) for r in E]}')
        if any(x < 0 for row in E for x in row):
            raise errors.InvalidPolynomialError(msg='Exponents must be non-negative')
        if n == 0:
            return InvertiblePolynomial(E=(), blocks=(), weights=())
        m = Matrix(E)
        if m.det() == 0:
            raise errors.InvalidPolynomialError(msg=f'Exponent matrix {[list(r) for r in E]} is singular')
        blocks = _decompose(E)
        if blocks is None:
            raise errors.InvalidPolynomialError(
                msg=f'{[list(r) for r in E]} is not a sum of Fermat, chain and loop atoms'
            )
        weights = tuple(_fraction(x) for x in m.LUsolve(Matrix([1] * n)))
        if any(not 0 < q <= 1 for q in weights):
            raise errors.InvalidPolynomialError(msg=f'Weights {[str(q) for q in weights]} are not in (0, 1]')
        return InvertiblePolynomial(E=E, blocks=blocks, weights=weights)

    @staticmethod
    def milnor_number(f: InvertiblePolynomial) -> int:
        """Milnor 数 prod(1/q_i - 1)"""
        mu = prod((1 / q - 1 for q in f.weights), start=Fraction(1))
        if mu.denominator != 1 or mu < 0:
            raise errors.InvalidPolynomialError(msg=f'Milnor number of {f} is {mu}')
        return int(mu)

    @staticmethod
    def milnor_number_jacobian(f: InvertiblePolynomial) -> int:
        """用 Jacobian 理想的 Groebner 基计算 dim C[z]/(df)"""
        if f.n == 0:
            return 1
        zs = symbols(f'z0:{f.n}')
        poly = sum(prod((z**e for z, e in zip(zs, row)), start=1) for row in f.E)
        basis = groebner([diff(poly, z) for z in zs], *zs, order='grevlex')
        leads = [Poly(g, *zs).monoms(order='grevlex')[0] for g in basis.exprs]
        if any(not any(lead) for lead in leads):
            return 0
        bounds = []
        for i in range(f.n):
            powers = [lead[i] for lead in leads if all(e == 0 for j, e in enumerate(lead) if j != i)]
            if not powers:
                raise errors.InvalidPolynomialError(msg=f'{f} has a non-isolated critical point')
            bounds.append(min(powers))
        return sum(
            1
            for m in product(*(range(b) for b in bounds))
            if not any(all(m[i] >= lead[i] for i in range(f.n)) for lead in leads)
        )

    @staticmethod
    def transpose(f: InvertiblePolynomial) -> InvertiblePolynomial:
        return InvertibleService.validate(list(zip(*f.E)))

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def symmetry_group(f: InvertiblePolynomial) -> DiagonalGroup:
        """G_f，由 E^-1 的列 mod 1 生成"""
        det = abs(int(Matrix(f.E).det())) if f.n else 1
        if det > settings.max_symmetry_order:
            raise errors.BoundExceededError(msg=f'|det E| = {det} exceeds {settings.max_symmetry_order}')
        phases = []
        if f.n:
            inverse = Matrix(f.E).inv()
            for j in range(f.n):
                column = [_fraction(inverse[i, j]) for i in range(f.n)]
                phases.append([(x.numerator, x.denominator) for x in column])
        group = group_service.build_group(DiagonalPresentationParam(kind='diagonal', phases=phases, dimension=f.n))
        if group.order != det:
            raise errors.InconsistentDataError(msg=f'G_f has order {group.order}, expected |det E| = {det}')
        log.info(f'G_f of {f}: order {group.order}')
        return DiagonalGroup(polynomial=f, group=group)

    @staticmethod
    def is_symmetry(f: InvertiblePolynomial, a: Sequence[Fraction]) -> bool:
        if len(a) != f.n:
            return False
        return all(sum((e * x for e, x in zip(row, a)), Fraction(0)).denominator == 1 for row in f.E)

    @staticmethod
    def check_symmetries(f: InvertiblePolynomial, group: FiniteGroup) -> None:
        if group.kind != PresentationKind.diagonal or group.degree != f.n:
            raise errors.GroupMismatchError(msg=f'{group.name} is not a diagonal group on {f.n} coordinates')
        for a in group.elements:
            if not InvertibleService.is_symmetry(f, a):
                raise errors.NotASubgroupError(msg=f'{[str(x) for x in a]} is not a symmetry of {f}')

    @staticmethod
    def pairing(f: InvertiblePolynomial, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
        """
        a^T E^T b mod 1

        :param f:
        :param a:
        :param b:
        :return:
        """
        if not InvertibleService.is_symmetry(f, a):
            raise errors.PairingError(msg=f'{[str(x) for x in a]} is not in G_f')
        dual = tuple(zip(*f.E))
        if len(b) != f.n or any(sum((e * x for e, x in zip(row, b)), Fraction(0)).denominator != 1 for row in dual):
            raise errors.PairingError(msg=f'{[str(x) for x in b]} is not in the dual group')
        # (E a)^T b
        return sum((sum((e * x for e, x in zip(row, a)), Fraction(0)) * y for row, y in zip(f.E, b)), Fraction(0)) % 1

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def duality(f: InvertiblePolynomial) -> BerglundHubschPair:
        """f 与转置的对称群及配对表，并检查配对完美"""
        dual = InvertibleService.transpose(f)
        g = InvertibleService.symmetry_group(f)
        h = InvertibleService.symmetry_group(dual)
        table = tuple(
            tuple(InvertibleService.pairing(f, a, b) for b in h.group.elements) for a in g.group.elements
        )
        for j in range(1, h.order):
            if all(table[i][j] == 0 for i in range(g.order)):
                log.error(f'pairing of {f} is degenerate at {h.group.elements[j]}')
                raise errors.PairingError(msg=f'Pairing of {f} with its transpose is degenerate')
        if g.order != h.order:
            raise errors.PairingError(msg=f'|G_f| = {g.order} but the dual group has order {h.order}')
        log.info(f'pairing of {f} and {dual} is perfect')
        return BerglundHubschPair(polynomial=f, dual=dual, group=g, dual_group=h, pairing=table)

    @staticmethod
    def dual_subgroup(pair: BerglundHubschPair, subgroup: Subgroup | Iterable[int]) -> Subgroup:
        """
        H^T，H 在配对下的零化子

        :param pair:
        :param subgroup: G_f 的子群
        :return: 对偶群的子群
        """
        h = group_service.as_subgroup(pair.group.group, subgroup)
        members = frozenset(
            b for b in range(pair.dual_group.order) if all(pair.pairing[a][b] == 0 for a in h.members)
        )
        if h.order * len(members) != pair.group.order:
            raise errors.PairingError(msg=f'|H| |H^T| = {h.order * len(members)} differs from |G_f|')
        return Subgroup(pair.dual_group.group, members)

    @staticmethod
    def fixed_locus(group: FiniteGroup, subgroup: Subgroup | Iterable[int] | None = None) -> tuple[int, ...]:
        """
        对角子群的公共不动坐标

        :param group:
        :param subgroup: 默认为整个群
        :return:
        """
        members = range(group.order) if subgroup is None else group_service.as_subgroup(group, subgroup).members
        return tuple(j for j in range(group.degree) if all(group.elements[a][j] == 0 for a in members))

    @staticmethod
    def restrict_to(f: InvertiblePolynomial, coordinates: Iterable[int]) -> InvertiblePolynomial:
        """f 中只含给定坐标的单项式"""
        keep = sorted(set(coordinates))
        rows = [row for row in f.E if all(e == 0 for j, e in enumerate(row) if j not in keep)]
        if len(rows) != len(keep):
            raise errors.InvalidPolynomialError(
                msg=f'{f} restricted to coordinates {keep} has {len(rows)} monomials, not {len(keep)}'
            )
        return InvertibleService.validate([[row[j] for j in keep] for row in rows])

    @staticmethod
    def chi_milnor_fixed(f: InvertiblePolynomial, group: FiniteGroup, subgroup: Subgroup | Iterable[int]) -> int:
        """chi(M_f^H)，即 f 在不动子空间上的 Milnor 纤维"""
        coordinates = InvertibleService.fixed_locus(group, subgroup)
        if not coordinates:
            return 0
        mu = InvertibleService.milnor_number(InvertibleService.restrict_to(f, coordinates))
        return 1 + (-1) ** (len(coordinates) - 1) * mu

    @staticmethod
    @lru_cache(maxsize=settings.cache_size)
    def milnor_data(f: InvertiblePolynomial, group: FiniteGroup) -> MilnorData:
        """
        每个子群的不动坐标、Milnor 数及不动 Milnor 纤维的 Euler 示性数

        :param f:
        :param group: f 的对角对称群
        :return:
        """
        InvertibleService.check_symmetries(f, group)
        lattice = group_service.build_lattice(group)
        per_subgroup = []
        for i, h in enumerate(lattice.subgroups):
            coordinates = InvertibleService.fixed_locus(group, h)
            restricted = InvertibleService.restrict_to(f, coordinates)
            mu = InvertibleService.milnor_number(restricted)
            chi = 1 + (-1) ** (len(coordinates) - 1) * mu if coordinates else 0
            per_subgroup.append(FixedLocusDatum(i, coordinates, restricted, mu, chi))
        chi_g = gspace_service.chi_G_from_fixed(group, {d.subgroup: d.chi for d in per_subgroup})
        log.debug(f'chi^G(M_f) of {f} over {group.name}: {chi_g.coeffs}')
        return MilnorData(polynomial=f, group=group, per_subgroup=tuple(per_subgroup), chi_G=chi_g)

    @staticmethod
    def chi_G_milnor(f: InvertiblePolynomial, group: FiniteGroup) -> BurnsideElement:
        return InvertibleService.milnor_data(f, group).chi_G

    @staticmethod
    def index_df(f: InvertiblePolynomial, group: FiniteGroup) -> BurnsideElement:
        """ind_rad^G(df) = -chibar^G(M_f) = [G/G] - chi^G(M_f)"""
        return burnside_service.one(group) - InvertibleService.chi_G_milnor(f, group)

    @staticmethod
    def index_df_from_dims(f: InvertiblePolynomial, group: FiniteGroup) -> BurnsideElement:
        """
        由各不动子空间上的 Milnor 数求 df 的指标，应与 index_df 一致

        :param f:
        :param group:
        :return:
        """
        data = InvertibleService.milnor_data(f, group)
        dims = {d.subgroup: d.mu for d in data.per_subgroup}
        fixed_dims = {d.subgroup: len(d.coordinates) for d in data.per_subgroup}
        index = index_service.index_from_form_dims(group, dims, fixed_dims)
        expected = InvertibleService.index_df(f, group)
        if index != expected:
            log.error(f'index of df over {group.name} disagrees: {index.coeffs} vs {expected.coeffs}')
            raise errors.InconsistentDataError(msg='Index of df from dimensions disagrees with the Milnor fibre route')
        return index

    @staticmethod
    def equivariant_milnor_number(f: InvertiblePolynomial, group: FiniteGroup) -> BurnsideElement:
        """mu^G_f = (-1)^(n-1) chibar^G(M_f)"""
        chibar = burnside_service.reduced(InvertibleService.chi_G_milnor(f, group))
        return index_service.equivariant_milnor(chibar, f.n)

    @staticmethod
    def higher_order_index_df(f: InvertiblePolynomial, group: FiniteGroup, k: int) -> int:
        return burnside_service.r_k(InvertibleService.index_df(f, group), k)

    @staticmethod
    def duality_check(f: InvertiblePolynomial) -> DualityReport:
        """
        比较 f 与其转置的 df 指标

        整个对称群上的 r_0 须相等；对 G_f 的每个子群 H 比较 H 上与 H^T 上的 r_1，
        成立的恒等式带符号 (-1)^n，字面不等者一并报告

        :param f:
        :return:
        """
        det = abs(int(Matrix(f.E).det())) if f.n else 1
        if det > settings.max_duality_det:
            raise errors.BoundExceededError(msg=f'|det E| = {det} exceeds {settings.max_duality_det}')
        pair = InvertibleService.duality(f)
        g = pair.group.group
        h = pair.dual_group.group
        r0 = burnside_service.r_k(InvertibleService.index_df(f, g), 0)
        r0_dual = burnside_service.r_k(InvertibleService.index_df(pair.dual, h), 0)
        lattice = group_service.build_lattice(g)
        dual_lattice = group_service.build_lattice(h)
        sign = -1 if f.n % 2 else 1
        pairs = []
        mismatches = []
        for i, sub in enumerate(lattice.subgroups):
            dual_sub = InvertibleService.dual_subgroup(pair, sub)
            r1 = InvertibleService.higher_order_index_df(f, group_service.subgroup_as_group(g, sub), 1)
            r1_dual = InvertibleService.higher_order_index_df(
                pair.dual, group_service.subgroup_as_group(h, dual_sub), 1
            )
            label = lattice.label(i)
            dual_label = dual_lattice.label(dual_lattice.index_of(dual_sub))
            literal = r1 == r1_dual
            if not literal:
                mismatches.append(label)
                log.warning(f'{f}: r_1 over {label} is {r1}, over {dual_label} of the transpose {r1_dual}')
            pairs.append(
                DualPair(
                    subgroup=label,
                    dual_subgroup=dual_label,
                    order=sub.order,
                    dual_order=dual_sub.order,
                    r1=r1,
                    r1_dual=r1_dual,
                    literal_equal=literal,
                    sign_corrected_equal=r1 == sign * r1_dual,
                )
            )
        passed = r0 == r0_dual and all(p.sign_corrected_equal for p in pairs)
        if not passed:
            log.error(f'duality check failed for {f}')
        return DualityReport(
            polynomial=str(f),
            dual=str(pair.dual),
            n=f.n,
            r0=r0,
            r0_dual=r0_dual,
            r0_equal=r0 == r0_dual,
            pairs=tuple(pairs),
            literal_mismatches=tuple(mismatches),
            passed=passed,
        )


invertible_service = InvertibleService()
