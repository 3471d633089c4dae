#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Any

import click

from backend.app.equivariant.api.common import CliContext, element_in, element_out, parse, pass_cli, run_command
from backend.app.equivariant.model.group import FiniteGroup
from backend.app.equivariant.model.index import SingularOrbitDatum
from backend.app.equivariant.schema.index import (
    FixedSetIndexParam,
    GsvParam,
    InduceOrbitParam,
    OrbitParam,
    PoincareHopfParam,
    StratumIndexDataParam,
)
from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.app.equivariant.services.index_service import index_service
from backend.common.enums import InversionFlavor


def _orbit(group: FiniteGroup, param: OrbitParam) -> SingularOrbitDatum:
    lattice = group_service.build_lattice(group)
    isotropy = lattice.subgroups[lattice.find(param.isotropy)]
    sub = group_service.subgroup_as_group(group, isotropy)
    return SingularOrbitDatum(isotropy=isotropy, local_index=element_in(sub, param.local))


def _by_index(group: FiniteGroup, values: dict[str, int]) -> dict[int, int]:
    lattice = group_service.build_lattice(group)
    return {lattice.find(label): v for label, v in values.items()}


def index_from_strata(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(StratumIndexDataParam, doc, prefix)
    group = group_service.build_group(param.group)
    data = index_service.stratum_data(group, [(e.cls, e.ind) for e in param.entries])
    index = index_service.index_from_strata(data)
    return {'index': element_out(index), 'cardinality': burnside_service.cardinality(index)}


def index_invert(doc: dict, prefix: str = '', flavor: InversionFlavor = InversionFlavor.both) -> dict[str, Any]:
    param = parse(FixedSetIndexParam, doc, prefix)
    group = group_service.build_group(param.group)
    data = index_service.fixed_set_data(group, param.per_subgroup, param.per_class)
    index = index_service.index_from_fixed_indices(data, flavor)
    return {'flavor': flavor, 'index': element_out(index), 'cardinality': burnside_service.cardinality(index)}


def index_induce(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(InduceOrbitParam, doc, prefix)
    group = group_service.build_group(param.group)
    datum = _orbit(group, param)
    return {'isotropy': param.isotropy, 'induced': element_out(index_service.induce_orbit_index(datum, group))}


def index_ph_check(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(PoincareHopfParam, doc, prefix)
    group = group_service.build_group(param.group)
    report = index_service.poincare_hopf_check(element_in(group, param.chi), [_orbit(group, o) for o in param.orbits])
    return {
        'pass': report.passed,
        'total': element_out(report.total),
        'expected': element_out(report.expected),
        'discrepancy': element_out(report.discrepancy),
    }


def index_gsv(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(GsvParam, doc, prefix)
    group = group_service.build_group(param.group)
    if param.radial is not None:
        gsv = index_service.gsv_from_radial(element_in(group, param.radial), element_in(group, param.chibar))
    else:
        gsv = index_service.gsv_assemble_from_dims(
            group, _by_index(group, param.dims), _by_index(group, param.fixed_dims), param.k
        )
    return {'gsv': element_out(gsv), 'cardinality': burnside_service.cardinality(gsv)}


@click.group(name='index')
def index_cli():
    """Equivariant radial and GSV indices"""


@index_cli.command(name='from-strata')
@pass_cli
def from_strata(ctx: CliContext):
    """Index from per-stratum totals"""
    run_command(ctx, index_from_strata)


@index_cli.command(name='invert')
@click.option(
    '--flavor',
    type=click.Choice(InversionFlavor.get_member_values()),
    default=InversionFlavor.both.value,
    show_default=True,
    help='Poset of the Moebius inversion',
)
@pass_cli
def invert(ctx: CliContext, flavor: str):
    """Index from fixed-set indices"""
    run_command(ctx, index_invert, flavor=InversionFlavor(flavor))


@index_cli.command(name='induce')
@pass_cli
def induce(ctx: CliContext):
    """Index contribution of a singular orbit"""
    run_command(ctx, index_induce)


@index_cli.command(name='ph-check')
@pass_cli
def ph_check(ctx: CliContext):
    """Equivariant Poincare-Hopf check"""
    run_command(ctx, index_ph_check)


@index_cli.command(name='gsv')
@pass_cli
def gsv(ctx: CliContext):
    """Equivariant GSV index"""
    run_command(ctx, index_gsv)
