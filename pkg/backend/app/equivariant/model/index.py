#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass

from backend.app.equivariant.model.burnside import BurnsideElement
from backend.app.equivariant.model.group import FiniteGroup, Subgroup


@dataclass(frozen=True)
class StratumIndexData:
    """(isotropy class index, total index over the stratum) per stratum"""

    group: FiniteGroup
    entries: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FixedSetIndexData:
    """
    Radial indices on fixed point sets

    ``per_subgroup[i]`` is ind_rad(X; V^H, 0) for the i-th subgroup of the lattice;
    ``per_class[c]``, when known, is ind_rad(X; V^[H], 0) where V^[H] is the union
    of the fixed sets of all conjugates of H.
    """

    group: FiniteGroup
    per_subgroup: tuple[int, ...]
    per_class: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SingularOrbitDatum:
    """A singular orbit: isotropy subgroup G_p of G and the local index over G_p"""

    isotropy: Subgroup
    local_index: BurnsideElement


@dataclass(frozen=True)
class PoincareHopfReport:
    passed: bool
    total: BurnsideElement
    expected: BurnsideElement
    discrepancy: BurnsideElement
