#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Any

import click

from backend.app.equivariant.api.common import CliContext, parse, pass_cli, payload_out, run_command
from backend.app.equivariant.schema.group import GroupInfoParam
from backend.app.equivariant.services.group_service import group_service


def group_info(doc: dict, prefix: str = '') -> dict[str, Any]:
    """Order, elements, generators and element conjugacy classes"""
    param = parse(GroupInfoParam, doc, prefix)
    group = group_service.build_group(param.group)
    return {
        'name': group.name,
        'kind': group.kind,
        'order': group.order,
        'abelian': group_service.is_abelian(group),
        'elements': [payload_out(x) for x in group.elements],
        'generators': list(group.generators),
        'element_classes': [list(c) for c in group_service.element_classes(group)],
    }


def group_lattice(doc: dict, prefix: str = '') -> dict[str, Any]:
    """Subgroups, conjugacy classes, normalizers and both Moebius tables"""
    param = parse(GroupInfoParam, doc, prefix)
    group = group_service.build_group(param.group)
    lattice = group_service.build_lattice(group)
    normalizer_labels = [lattice.label(lattice.index_of(n)) for n in lattice.normalizers]
    return {
        'group': group.name,
        'order': group.order,
        'subgroups': [
            {
                'label': lattice.label(i),
                'order': h.order,
                'members': list(h.sorted_members),
                'class': lattice.class_label(lattice.class_of[i]),
                'normalizer': normalizer_labels[i],
            }
            for i, h in enumerate(lattice.subgroups)
        ],
        'classes': [
            {'label': lattice.class_label(c), 'size': len(members), 'members': [lattice.label(i) for i in members]}
            for c, members in enumerate(lattice.classes)
        ],
        'mu_sub': lattice.mu_sub.tolist(),
        'mu_conj': lattice.mu_conj.tolist(),
    }


@click.group(name='group')
def group_cli():
    """Finite groups and subgroup lattices"""


@group_cli.command(name='info')
@pass_cli
def info(ctx: CliContext):
    """Enumerate a group"""
    run_command(ctx, group_info)


@group_cli.command(name='lattice')
@pass_cli
def lattice(ctx: CliContext):
    """Subgroup lattice with Moebius functions"""
    run_command(ctx, group_lattice)
