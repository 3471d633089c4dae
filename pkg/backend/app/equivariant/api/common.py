#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from __future__ import annotations

import sys

from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any, TypeVar

import click

from joblib import Parallel, delayed
from pydantic import BaseModel, ValidationError

from backend.app.equivariant.model.burnside import BurnsideElement
from backend.app.equivariant.model.group import FiniteGroup
from backend.app.equivariant.schema.burnside import BurnsideElementParam
from backend.app.equivariant.services.burnside_service import burnside_service
from backend.app.equivariant.services.group_service import group_service
from backend.common.enums import OutputFormat
from backend.common.exception.exception import errors
from backend.common.exception.exception_handlers import validation_exception_handler
from backend.common.log import log
from backend.utils.serializers import decode_json, encode_json, encode_tsv

M = TypeVar('M', bound=BaseModel)


@dataclass
class CliContext:
    """Options shared by every subcommand"""

    source: str | None
    data: str | None
    target: str | None
    format: OutputFormat
    jobs: int


def parse(model: type[M], doc: Any, prefix: str = '') -> M:
    """
    Validate a document against an input schema

    :param model:
    :param doc:
    :param prefix: location of ``doc`` in the input, used in error paths
    :return:
    """
    try:
        return model.model_validate(doc)
    except ValidationError as e:
        raise validation_exception_handler(e, prefix)


def element_in(group: FiniteGroup, param: BurnsideElementParam) -> BurnsideElement:
    coeffs: dict[str, int] = {}
    for item in param.coeffs:
        coeffs[item.cls] = coeffs.get(item.cls, 0) + item.a
    return burnside_service.from_coefficients(group, coeffs)


def element_out(b: BurnsideElement) -> dict[str, Any]:
    """Canonical Burnside element: classes in canonical order, zero coefficients omitted"""
    lattice = group_service.build_lattice(b.group)
    return {
        'group': b.group.name,
        'coeffs': [{'class': lattice.class_label(c), 'a': a} for c, a in b.support()],
    }


def payload_out(payload: Any) -> Any:
    """Element payload as JSON: permutation images, phase vector or table id"""
    if isinstance(payload, tuple):
        return list(payload)
    return payload


def _load(ctx: CliContext) -> Any:
    if ctx.data is not None:
        return decode_json(ctx.data)
    if ctx.source is None or ctx.source == '-':
        return decode_json(sys.stdin.buffer.read())
    try:
        return decode_json(Path(ctx.source).read_bytes())
    except OSError as e:
        raise errors.InputError(msg=f'Cannot read {ctx.source}: {e.strerror}', path=ctx.source)


def _emit(ctx: CliContext, result: Any) -> None:
    if ctx.format == OutputFormat.tsv:
        out = encode_tsv(result).encode()
    else:
        out = encode_json(result)
    if ctx.target is None or ctx.target == '-':
        click.echo(out, nl=False)
    else:
        Path(ctx.target).write_bytes(out)


def _run_item(handler: Callable[..., Any], doc: Any, prefix: str, options: dict[str, Any]) -> Any:
    if not isinstance(doc, dict):
        raise errors.InputError(msg='Expected a JSON object', path=prefix or '$')
    return handler(doc, prefix=prefix, **options)


def run_command(ctx: CliContext, handler: Callable[..., Any], **options: Any) -> None:
    """
    Read the input, run ``handler`` on it (or on every item of a batch) and write the result

    A document {"batch": [...]} runs the handler per item on ``ctx.jobs`` workers;
    results keep the input order.

    :param ctx:
    :param handler: module-level function ``handler(doc, prefix=..., **options) -> result``
    :param options: command options passed through to the handler
    :return:
    """
    doc = _load(ctx)
    if isinstance(doc, dict) and set(doc) == {'batch'}:
        items = doc['batch']
        if not isinstance(items, list):
            raise errors.InputError(msg='batch must be a list', path='batch')
        log.info(f'running {handler.__name__} on {len(items)} items with {ctx.jobs} jobs')
        result = Parallel(n_jobs=ctx.jobs)(
            delayed(_run_item)(handler, item, f'batch.{i}', options) for i, item in enumerate(items)
        )
    else:
        result = _run_item(handler, doc, '', options)
    _emit(ctx, result)


pass_cli = click.make_pass_decorator(CliContext)
