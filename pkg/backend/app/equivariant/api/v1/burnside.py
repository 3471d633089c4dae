#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Any

import click

from backend.app.equivariant.api.common import (
    CliContext,
    element_in,
    element_out,
    parse,
    pass_cli,
    payload_out,
    run_command,
)
from backend.app.equivariant.schema.burnside import (
    BurnsideElementInputParam,
    BurnsideGroupParam,
    BurnsideMulParam,
    BurnsideSubgroupParam,
)
from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service


def burnside_marks(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(BurnsideGroupParam, doc, prefix)
    group = group_service.build_group(param.group)
    tom = burnside_service.table_of_marks(group)
    labels = [tom.lattice.class_label(c) for c in range(tom.lattice.class_count)]
    return {'group': group.name, 'classes': labels, 'marks': tom.marks.tolist()}


def burnside_mul(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(BurnsideMulParam, doc, prefix)
    group = group_service.build_group(param.group)
    product = burnside_service.multiply(element_in(group, param.left), element_in(group, param.right))
    return {'product': element_out(product), 'cardinality': burnside_service.cardinality(product)}


def burnside_restrict(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(BurnsideSubgroupParam, doc, prefix)
    group = group_service.build_group(param.group)
    lattice = group_service.build_lattice(group)
    subgroup = lattice.subgroups[lattice.find(param.subgroup)]
    restricted = burnside_service.restrict(element_in(group, param.element), subgroup)
    return {'subgroup': param.subgroup, 'restricted': element_out(restricted)}


def burnside_induce(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(BurnsideSubgroupParam, doc, prefix)
    group = group_service.build_group(param.group)
    lattice = group_service.build_lattice(group)
    sub = group_service.subgroup_as_group(group, lattice.subgroups[lattice.find(param.subgroup)])
    induced = burnside_service.induce(element_in(sub, param.element), group)
    return {'subgroup': param.subgroup, 'induced': element_out(induced)}


def burnside_rk(doc: dict, prefix: str = '', k: int = 0) -> dict[str, Any]:
    param = parse(BurnsideElementInputParam, doc, prefix)
    group = group_service.build_group(param.group)
    return {'k': k, 'value': burnside_service.r_k(element_in(group, param.element), k)}


def burnside_char(doc: dict, prefix: str = '') -> dict[str, Any]:
    param = parse(BurnsideElementInputParam, doc, prefix)
    group = group_service.build_group(param.group)
    character = burnside_service.permutation_character(element_in(group, param.element))
    return {
        'group': group.name,
        'classes': [
            {'representative': payload_out(group.elements[cls[0]]), 'members': list(cls), 'value': value}
            for cls, value in zip(character.classes, character.values)
        ],
    }


@click.group(name='burnside')
def burnside_cli():
    """Burnside ring operations"""


@burnside_cli.command(name='marks')
@pass_cli
def marks(ctx: CliContext):
    """Table of marks"""
    run_command(ctx, burnside_marks)


@burnside_cli.command(name='mul')
@pass_cli
def mul(ctx: CliContext):
    """Product of two elements"""
    run_command(ctx, burnside_mul)


@burnside_cli.command(name='restrict')
@pass_cli
def restrict(ctx: CliContext):
    """Restriction to a subgroup"""
    run_command(ctx, burnside_restrict)


@burnside_cli.command(name='induce')
@pass_cli
def induce(ctx: CliContext):
    """Induction from a subgroup"""
    run_command(ctx, burnside_induce)


@burnside_cli.command(name='rk')
@click.option('--k', 'k', type=click.IntRange(min=0), default=0, show_default=True, help='Order of the reduction')
@pass_cli
def rk(ctx: CliContext, k: int):
    """Reduction r_k to an integer"""
    run_command(ctx, burnside_rk, k=k)


@burnside_cli.command(name='char')
@pass_cli
def char(ctx: CliContext):
    """Permutation character"""
    run_command(ctx, burnside_char)
