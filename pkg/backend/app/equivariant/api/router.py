#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import click

from backend.app.equivariant.api.common import CliContext
from backend.app.equivariant.api.v1.burnside import burnside_cli
from backend.app.equivariant.api.v1.euler import euler_cli
from backend.app.equivariant.api.v1.group import group_cli
from backend.app.equivariant.api.v1.index import index_cli
from backend.app.equivariant.api.v1.poly import poly_cli
from backend.common.enums import OutputFormat
from backend.common.log import setup_logging
from backend.core.config import settings

_VERBOSITY = {0: None, 1: 'INFO'}


@click.group(name=settings.app_name, context_settings={'help_option_names': ['-h', '--help']})
@click.version_option(settings.app_version, prog_name=settings.app_name)
@click.option('--in', 'source', type=click.Path(dir_okay=False, allow_dash=True), default=None, help='Input JSON file, - for stdin')
@click.option('--data', 'data', default=None, help='Inline input JSON')
@click.option('--out', 'target', type=click.Path(dir_okay=False, allow_dash=True), default=None, help='Output file, stdout by default')
@click.option(
    '--format',
    'fmt',
    type=click.Choice(OutputFormat.get_member_values()),
    default=None,
    help=f'Output format [default: {settings.default_format}]',
)
@click.option('--jobs', type=click.IntRange(min=1), default=None, help='Workers for {"batch": [...]} inputs')
@click.option('-v', '--verbose', count=True, help='-v for INFO, -vv for DEBUG logs on stderr')
@click.pass_context
def cli(ctx: click.Context, source, data, target, fmt, jobs, verbose):
    """Equivariant radial and GSV indices with exact arithmetic"""
    if source is not None and data is not None:
        raise click.UsageError('--in and --data are mutually exclusive')
    if verbose:
        setup_logging(_VERBOSITY.get(verbose, 'DEBUG'))
    ctx.obj = CliContext(
        source=source,
        data=data,
        target=target,
        format=OutputFormat(fmt or settings.default_format),
        jobs=jobs or settings.default_jobs,
    )


# Subcommand groups
cli.add_command(group_cli)
cli.add_command(burnside_cli)
cli.add_command(euler_cli)
cli.add_command(index_cli)
cli.add_command(poly_cli)
