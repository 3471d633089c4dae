#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from backend.app.equivariant.model.group import FiniteGroup, SubgroupLattice
from backend.common.exception.exception import errors


@dataclass(frozen=True)
class BurnsideElement:
    """
    An element of the Burnside ring B(G)

    ``coeffs[c]`` is the coefficient of [G/H] for the c-th conjugacy class of
    subgroups in canonical order. Ring multiplication goes through the table of
    marks and lives in ``burnside_service``.
    """

    group: FiniteGroup
    coeffs: tuple[int, ...]

    def _check(self, other: BurnsideElement) -> None:
        if not isinstance(other, BurnsideElement):
            raise TypeError(f'Expected BurnsideElement, got {type(other).__name__}')
        if other.group is not self.group:
            raise errors.GroupMismatchError(msg=f'{self.group.name} and {other.group.name} differ')

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        return BurnsideElement(self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.group, tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> BurnsideElement:
        if not isinstance(k, int):
            return NotImplemented
        return BurnsideElement(self.group, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[tuple[int, int]]:
        """(class index, coefficient) pairs with non-zero coefficient"""
        return [(c, a) for c, a in enumerate(self.coeffs) if a]


@dataclass(frozen=True, eq=False)
class TableOfMarks:
    """``marks[K, H]`` = |(G/K)^H| over conjugacy classes; zero unless [H] <= [K]"""

    group: FiniteGroup
    lattice: SubgroupLattice
    marks: np.ndarray

    def mark(self, k: int, h: int) -> int:
        return int(self.marks[k, h])


@dataclass(frozen=True)
class ClassFunction:
    """Values on the conjugacy classes of elements, in ``element_classes`` order"""

    group: FiniteGroup
    classes: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def at(self, g: int) -> int:
        for cls, value in zip(self.classes, self.values):
            if g in cls:
                return value
        raise errors.NotASubgroupError(msg=f'{g} is not an element of {self.group.name}')
