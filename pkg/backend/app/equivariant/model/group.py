#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

import re

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Union

import numpy as np

from backend.common.enums import PresentationKind
from backend.common.exception.exception import errors

# A permutation in one-line form (0-based images), a phase vector reduced mod 1,
# or the id of an element of an explicit multiplication table
Element = Union[tuple[int, ...], tuple[Fraction, ...], int]

_LABEL_RE = re.compile(r'^H(\d+)_(\d+)$')


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    An explicitly enumerated finite group

    Elements are addressed by their position in ``elements`` (canonical order:
    identity first, remaining payloads sorted). ``table[a, b]`` is the position
    of the product ``a * b``; for permutations the product applies ``b`` first.
    """

    name: str
    kind: PresentationKind
    degree: int
    elements: tuple[Element, ...]
    table: np.ndarray
    inverse: tuple[int, ...]
    generators: tuple[int, ...]
    identity: int = 0
    parent: FiniteGroup | None = None
    embedding: tuple[int, ...] | None = None
    """Positions of the elements inside ``parent`` when this group was cut out of a larger one."""

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def conjugation(self) -> np.ndarray:
        """``conjugation[g, x]`` is the position of ``g x g^-1``"""
        n = self.order
        out = np.empty((n, n), dtype=np.int64)
        for g in range(n):
            out[g] = self.table[self.table[g], self.inverse[g]]
        out.setflags(write=False)
        return out

    def __repr__(self) -> str:
        return f'FiniteGroup({self.name!r}, order={self.order})'


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``group``, stored as the set of member positions"""

    group: FiniteGroup
    members: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return self.order, self.sorted_members

    def __le__(self, other: Subgroup) -> bool:
        return self.members <= other.members

    def __repr__(self) -> str:
        return f'Subgroup(order={self.order}, members={self.sorted_members})'


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """
    All subgroups of a group with the data both Moebius inversions need

    ``subgroups`` is sorted by (order, member positions). ``classes`` lists the
    conjugacy classes as tuples of subgroup indices; the first entry of each
    class is its representative, and classes are ordered by representative.
    Tables indexed by subgroups are s x s, tables indexed by classes are c x c.
    """

    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    leq: np.ndarray
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    normalizers: tuple[Subgroup, ...]
    mu_sub: np.ndarray
    zeta_conj: np.ndarray
    mu_conj: np.ndarray

    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {h.members: i for i, h in enumerate(self.subgroups)})

    @property
    def size(self) -> int:
        return len(self.subgroups)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def index_of(self, subgroup: Subgroup | frozenset[int]) -> int:
        members = subgroup.members if isinstance(subgroup, Subgroup) else frozenset(subgroup)
        try:
            return self._index[members]
        except KeyError:
            raise errors.NotASubgroupError(msg=f'{sorted(members)} is not a subgroup of {self.group.name}')

    def class_index(self, subgroup: Subgroup | frozenset[int]) -> int:
        return self.class_of[self.index_of(subgroup)]

    def representative(self, c: int) -> Subgroup:
        return self.subgroups[self.classes[c][0]]

    def label(self, i: int) -> str:
        return f'H{self.subgroups[i].order}_{i}'

    def class_label(self, c: int) -> str:
        return self.label(self.classes[c][0])

    def find(self, label: str) -> int:
        """
        Subgroup index of a canonical label

        :param label: ``H<order>_<index>``
        :return:
        """
        match = _LABEL_RE.match(label)
        if match is None:
            raise errors.UnknownClassError(msg=f'Malformed subgroup label: {label}')
        order, i = int(match.group(1)), int(match.group(2))
        if i >= self.size or self.subgroups[i].order != order:
            raise errors.UnknownClassError(msg=f'Unknown subgroup label {label} for {self.group.name}')
        return i

    def find_class(self, label: str) -> int:
        """Class index of a label; any member of the class is accepted"""
        return self.class_of[self.find(label)]

    def normalizer_order(self, i: int) -> int:
        return self.normalizers[i].order
