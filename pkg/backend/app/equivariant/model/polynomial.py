#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from backend.app.equivariant.model.burnside import BurnsideElement
from backend.app.equivariant.model.group import FiniteGroup
from backend.common.enums import BlockKind


@dataclass(frozen=True)
class Block:
    """
    One atom of an invertible polynomial

    ``variables`` follow the pointer order: for a chain z1^a1 z2 + ... + zk^ak the
    last variable is the Fermat-like tail; for a loop the last one points back to
    the first. ``exponents[i]`` is the exponent of ``variables[i]`` in its own monomial.
    """

    kind: BlockKind
    variables: tuple[int, ...]
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class InvertiblePolynomial:
    """f = sum over rows i of prod_j z_j^E[i][j]"""

    E: tuple[tuple[int, ...], ...]
    blocks: tuple[Block, ...]
    weights: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.E)

    def __str__(self) -> str:
        if not self.E:
            return '0'
        names = 'xyz' if self.n <= 3 else None
        terms = []
        for row in self.E:
            factors = []
            for j, e in enumerate(row):
                if e == 0:
                    continue
                var = names[j] if names else f'z{j + 1}'
                factors.append(var if e == 1 else f'{var}^{e}')
            terms.append('*'.join(factors))
        return ' + '.join(terms)


@dataclass(frozen=True)
class DiagonalGroup:
    """A group of diagonal symmetries of ``polynomial``, elements are phase vectors mod 1"""

    polynomial: InvertiblePolynomial
    group: FiniteGroup

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def generators(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(self.group.elements[g] for g in self.group.generators)


@dataclass(frozen=True)
class FixedLocusDatum:
    """Milnor fibre data of f restricted to the fixed subspace of one subgroup"""

    subgroup: int
    coordinates: tuple[int, ...]
    restricted: InvertiblePolynomial
    mu: int
    chi: int


@dataclass(frozen=True)
class MilnorData:
    polynomial: InvertiblePolynomial
    group: FiniteGroup
    per_subgroup: tuple[FixedLocusDatum, ...]
    chi_G: BurnsideElement


@dataclass(frozen=True, eq=False)
class BerglundHubschPair:
    """
    f, its transpose and both maximal diagonal symmetry groups

    ``pairing[a, b]`` is the pairing of the a-th element of G_f with the b-th
    element of the dual group.
    """

    polynomial: InvertiblePolynomial
    dual: InvertiblePolynomial
    group: DiagonalGroup
    dual_group: DiagonalGroup
    pairing: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class DualPair:
    subgroup: str
    dual_subgroup: str
    order: int
    dual_order: int
    r1: int
    r1_dual: int
    literal_equal: bool
    sign_corrected_equal: bool


@dataclass(frozen=True)
class DualityReport:
    polynomial: str
    dual: str
    n: int
    r0: int
    r0_dual: int
    r0_equal: bool
    pairs: tuple[DualPair, ...]
    literal_mismatches: tuple[str, ...]
    passed: bool
