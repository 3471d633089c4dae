#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Any

import click

from backend.app.equivariant.api.common import CliContext, element_out, parse, pass_cli, run_command
from backend.app.equivariant.model.gspace import GSimplicialComplex
from backend.app.equivariant.schema.gspace import ComplexParam, StrataParam
from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.gspace_service import gspace_service


def _complex(doc: dict, prefix: str) -> GSimplicialComplex:
    param = parse(ComplexParam, doc, prefix)
    X = gspace_service.complex_from_action(param.vertices, param.simplices, param.action)
    return gspace_service.barycentric_subdivide(X) if param.subdivide else X


def euler_strat(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(StrataParam, doc, prefix)
    group = group_service.build_group(param.group)
    data = gspace_service.stratified_data(group, [(s.cls, s.chi) for s in param.strata])
    chi = gspace_service.chi_G_stratified(data)
    return {
        'chi_G': element_out(chi),
        'reduced': element_out(gspace_service.reduced_chi_G(chi)),
        'chi': burnside_service.cardinality(chi),
    }


def euler_simplicial(doc: dict, prefix: str = '') -> dict[str, Any]:
    X = _complex(doc, prefix)
    chi = gspace_service.chi_G_simplicial(X)
    lattice = group_service.build_lattice(X.group)
    fixed = {
        lattice.class_label(c): gspace_service.euler_characteristic(
            gspace_service.fixed_subcomplex(X, lattice.representative(c))
        )
        for c in range(lattice.class_count)
    }
    return {
        'group': X.group.name,
        'order': X.group.order,
        'simplices': len(X.simplices),
        'chi': gspace_service.euler_characteristic(X),
        'chi_G': element_out(chi),
        'reduced': element_out(gspace_service.reduced_chi_G(chi)),
        'fixed_chi': fixed,
    }


def euler_orbifold(doc: dict, prefix: str = '', k: int = 1) -> dict[str, Any]:
    X = _complex(doc, prefix)
    chi = gspace_service.chi_G_simplicial(X)
    direct = gspace_service.chi_k_direct(X, k)
    reduced = burnside_service.r_k(chi, k)
    return {'k': k, 'direct': direct, 'from_chi_G': reduced, 'agree': direct == reduced}


@click.group(name='euler')
def euler_cli():
    """Equivariant Euler characteristics"""


@euler_cli.command(name='strat')
@pass_cli
def strat(ctx: CliContext):
    """chi^G from orbit-type strata"""
    run_command(ctx, euler_strat)


@euler_cli.command(name='simplicial')
@pass_cli
def simplicial(ctx: CliContext):
    """chi^G of a simplicial G-complex"""
    run_command(ctx, euler_simplicial)


@euler_cli.command(name='orbifold')
@click.option('--k', 'k', type=click.IntRange(min=0), default=1, show_default=True, help='Order of the characteristic')
@pass_cli
def orbifold(ctx: CliContext, k: int):
    """Orbifold and higher order Euler characteristics"""
    run_command(ctx, euler_orbifold, k=k)
