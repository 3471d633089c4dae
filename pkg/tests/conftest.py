#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from itertools import product

import hypothesis.strategies as st
import pytest

from sympy import Matrix

from backend.app.equivariant.model.burnside import BurnsideElement
from backend.app.equivariant.model.group import FiniteGroup
from backend.app.equivariant.schema.group import PermPresentationParam
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.gspace_service import gspace_service

PERM_GROUPS = {
    'Z2': (2, [[1, 0]]),
    'Z6': (6, [[1, 2, 3, 4, 5, 0]]),
    'Z2xZ2': (4, [[1, 0, 2, 3], [0, 1, 3, 2]]),
    'S3': (3, [[1, 0, 2], [1, 2, 0]]),
    'D4': (4, [[1, 2, 3, 0], [0, 3, 2, 1]]),
}

ABELIAN = ('Z2', 'Z6', 'Z2xZ2')


def perm_group(name: str) -> FiniteGroup:
    degree, generators = PERM_GROUPS[name]
    return group_service.build_group(PermPresentationParam(kind='perm', degree=degree, generators=generators))


_GROUPS = {name: perm_group(name) for name in PERM_GROUPS}


def standard_group(name: str) -> FiniteGroup:
    """One shared group object per name, so cached lattices and Burnside elements line up"""
    return _GROUPS[name]


def class_of_order(group: FiniteGroup, order: int) -> int:
    """Index of the only conjugacy class of subgroups of the given order"""
    lattice = group_service.build_lattice(group)
    found = [c for c in range(lattice.class_count) if lattice.representative(c).order == order]
    assert len(found) == 1, f'{len(found)} classes of order {order}'
    return found[0]


@st.composite
def burnside_elements(draw, name: str | None = None, bound: int = 5) -> BurnsideElement:
    group = standard_group(name or draw(st.sampled_from(list(PERM_GROUPS))))
    c = group_service.build_lattice(group).class_count
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=c, max_size=c))
    return BurnsideElement(group, tuple(coeffs))


@pytest.fixture(params=list(PERM_GROUPS))
def any_group(request) -> FiniteGroup:
    return standard_group(request.param)


# Octahedron: opposite vertex pairs (0, 1), (2, 3), (4, 5)
OCTAHEDRON = [[a, b, c] for a, b, c in product((0, 1), (2, 3), (4, 5))]
TRIANGLE = [[0, 1], [1, 2], [0, 2]]
SQUARE = [[0, 1], [1, 2], [2, 3], [3, 0]]
HEXAGON = [[i, (i + 1) % 6] for i in range(6)]
TETRAHEDRON = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]


def _complex(n: int, facets, action, subdivide: bool = False):
    X = gspace_service.complex_from_action(list(range(n)), facets, action)
    return gspace_service.barycentric_subdivide(X) if subdivide else X


def complex_suite() -> dict:
    """Regular G-complexes: circles and spheres with rotations, reflections, antipodal and product actions"""
    return {
        'triangle_rotation': _complex(3, TRIANGLE, {'r': [1, 2, 0]}),
        'square_reflection': _complex(4, SQUARE, {'s': [0, 3, 2, 1]}),
        'square_dihedral': _complex(4, SQUARE, {'r': [1, 2, 3, 0], 's': [0, 3, 2, 1]}, subdivide=True),
        'hexagon_rotation': _complex(6, HEXAGON, {'r': [1, 2, 3, 4, 5, 0]}),
        'triangle_symmetric': _complex(3, TRIANGLE, {'s': [0, 2, 1], 'r': [1, 2, 0]}, subdivide=True),
        'edge_swap': _complex(2, [[0, 1]], {'s': [1, 0]}, subdivide=True),
        'octahedron_antipodal': _complex(6, OCTAHEDRON, {'a': [1, 0, 3, 2, 5, 4]}),
        'octahedron_half_turn': _complex(6, OCTAHEDRON, {'t': [1, 0, 3, 2, 4, 5]}),
        'octahedron_quarter_turn': _complex(6, OCTAHEDRON, {'q': [2, 3, 1, 0, 4, 5]}),
        'octahedron_reflection': _complex(6, OCTAHEDRON, {'m': [1, 0, 2, 3, 4, 5]}),
        'octahedron_product': _complex(6, OCTAHEDRON, {'a': [1, 0, 3, 2, 5, 4], 't': [1, 0, 3, 2, 4, 5]}),
        'tetrahedron_trivial': _complex(4, TETRAHEDRON, {}),
    }


def chain(*a: int) -> list[list[int]]:
    """x1^a1 x2 + x2^a2 x3 + ... + xk^ak"""
    k = len(a)
    return [[a[i] if j == i else (1 if j == i + 1 else 0) for j in range(k)] for i in range(k)]


def loop(*a: int) -> list[list[int]]:
    """x1^a1 x2 + ... + xk^ak x1"""
    k = len(a)
    return [[a[i] if j == i else (1 if j == (i + 1) % k else 0) for j in range(k)] for i in range(k)]


def block_sum(*blocks: list[list[int]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, e in enumerate(row):
                out[offset + i][offset + j] = e
        offset += len(b)
    return out


def _exponents(k: int, det_of, max_det: int) -> list[tuple[int, ...]]:
    """Exponent tuples >= 2 of length k whose determinant stays within max_det"""
    return [a for a in product(range(2, max_det + 1), repeat=k) if det_of(a) <= max_det]


def invertible_suite(max_det: int = 60) -> list[list[list[int]]]:
    """Every Fermat, chain and loop combination in at most three variables with |det E| <= max_det"""
    one = [([[a]], a) for a in range(2, max_det + 1)]
    two = [(chain(*a), a[0] * a[1]) for a in _exponents(2, lambda a: a[0] * a[1], max_det)]
    two += [(loop(*a), a[0] * a[1] - 1) for a in _exponents(2, lambda a: a[0] * a[1] - 1, max_det)]
    three = [(chain(*a), a[0] * a[1] * a[2]) for a in _exponents(3, lambda a: a[0] * a[1] * a[2], max_det)]
    three += [(loop(*a), a[0] * a[1] * a[2] + 1) for a in _exponents(3, lambda a: a[0] * a[1] * a[2] + 1, max_det)]

    suite = [E for E, _ in one + two + three]
    # block sums up to reordering of the blocks
    for (x, dx), (y, dy) in product(one, repeat=2):
        if x[0][0] <= y[0][0] and dx * dy <= max_det:
            suite.append(block_sum(x, y))
    for (x, dx), (y, dy) in product(one, two):
        if dx * dy <= max_det:
            suite.append(block_sum(x, y))
    for (x, dx), (y, dy), (z, dz) in product(one, repeat=3):
        if x[0][0] <= y[0][0] <= z[0][0] and dx * dy * dz <= max_det:
            suite.append(block_sum(x, y, z))
    assert all(abs(int(Matrix(E).det())) <= max_det for E in suite)
    return suite
