#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from backend.app.equivariant.model.group import FiniteGroup


@dataclass(frozen=True)
class StratifiedGData:
    """Orbit-type strata of a G-space: (conjugacy class index, chi of the quotient stratum)"""

    group: FiniteGroup
    strata: tuple[tuple[int, int], ...]


Simplex = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class GSimplicialComplex:
    """
    A finite simplicial complex with a simplicial group action

    Vertices are addressed by position; ``labels`` keeps the ids the caller used.
    ``simplices`` holds every face as a sorted tuple of vertex positions, ordered
    by (dimension, vertices). ``action[g]`` is the vertex permutation of the
    group element at position g, so the acting group may be any group mapping
    onto the vertex permutations, not only the permutation group itself.
    """

    group: FiniteGroup
    labels: tuple[str, ...]
    simplices: tuple[Simplex, ...]
    action: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @cached_property
    def simplex_set(self) -> frozenset[Simplex]:
        return frozenset(self.simplices)

    def image(self, g: int, simplex: Simplex) -> Simplex:
        perm = self.action[g]
        return tuple(sorted(perm[v] for v in simplex))

    def __repr__(self) -> str:
        return f'GSimplicialComplex(vertices={self.vertex_count}, simplices={len(self.simplices)}, group={self.group!r})'
