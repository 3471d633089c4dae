#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Any

import click

from backend.app.equivariant.api.common import CliContext, element_out, parse, pass_cli, run_command
from backend.app.equivariant.model.group import FiniteGroup
from backend.app.equivariant.model.polynomial import InvertiblePolynomial
from backend.app.equivariant.schema.polynomial import PolynomialParam
from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.invertible_service import invertible_service


def _resolve(param: PolynomialParam) -> tuple[InvertiblePolynomial, FiniteGroup]:
    f = invertible_service.validate(param.E)
    if param.group is not None:
        group = group_service.build_group(param.group)
        invertible_service.check_symmetries(f, group)
        return f, group
    full = invertible_service.symmetry_group(f).group
    if param.subgroup is None:
        return f, full
    lattice = group_service.build_lattice(full)
    return f, group_service.subgroup_as_group(full, lattice.subgroups[lattice.find(param.subgroup)])


def poly_analyze(doc: dict, prefix: str = '', jacobian: bool = False) -> dict[str, Any]:
    param = parse(PolynomialParam, doc, prefix)
    f = invertible_service.validate(param.E)
    symmetries = invertible_service.symmetry_group(f)
    result = {
        'E': [list(row) for row in f.E],
        'polynomial': str(f),
        'blocks': [{'kind': b.kind, 'variables': list(b.variables), 'exponents': list(b.exponents)} for b in f.blocks],
        'weights': list(f.weights),
        'mu': invertible_service.milnor_number(f),
        'group_order': symmetries.order,
        'generators': [list(g) for g in symmetries.generators],
        'transpose': [list(row) for row in invertible_service.transpose(f).E],
    }
    if jacobian:
        result['mu_jacobian'] = invertible_service.milnor_number_jacobian(f)
    return result


def poly_index(doc: dict, prefix: str = '', k: int | None = None) -> dict[str, Any]:
    param = parse(PolynomialParam, doc, prefix)
    f, group = _resolve(param)
    data = invertible_service.milnor_data(f, group)
    lattice = group_service.build_lattice(group)
    index = invertible_service.index_df(f, group)
    invertible_service.index_df_from_dims(f, group)
    result = {
        'polynomial': str(f),
        'group': group.name,
        'order': group.order,
        'index': element_out(index),
        'cardinality': burnside_service.cardinality(index),
        'chi_G': element_out(data.chi_G),
        'reduced_chi_G': element_out(burnside_service.reduced(data.chi_G)),
        'equivariant_milnor': element_out(invertible_service.equivariant_milnor_number(f, group)),
        'fixed': [
            {'subgroup': lattice.label(d.subgroup), 'coordinates': list(d.coordinates), 'mu': d.mu, 'chi': d.chi}
            for d in data.per_subgroup
        ],
    }
    if k is not None:
        result['k'] = k
        result['r_k'] = invertible_service.higher_order_index_df(f, group, k)
    return result


def poly_dual_check(doc: dict, prefix: str = '') -> Any:
    param = parse(PolynomialParam, doc, prefix)
    return invertible_service.duality_check(invertible_service.validate(param.E))


@click.group(name='poly')
def poly_cli():
    """Invertible polynomials"""


@poly_cli.command(name='analyze')
@click.option('--jacobian', is_flag=True, default=False, help='Cross-check mu with the Jacobian algebra')
@pass_cli
def analyze(ctx: CliContext, jacobian: bool):
    """Blocks, weights, Milnor number and symmetry group"""
    run_command(ctx, poly_analyze, jacobian=jacobian)


@poly_cli.command(name='index')
@click.option('--k', 'k', type=click.IntRange(min=0), default=None, help='Also report r_k of the index')
@pass_cli
def index(ctx: CliContext, k: int | None):
    """Equivariant index of df"""
    run_command(ctx, poly_index, k=k)


@poly_cli.command(name='dual-check')
@pass_cli
def dual_check(ctx: CliContext):
    """Berglund-Huebsch duality consistency"""
    run_command(ctx, poly_dual_check)
