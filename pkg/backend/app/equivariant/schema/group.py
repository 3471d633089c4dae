#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator


class SchemaBase(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)


class PermPresentationParam(SchemaBase):
    kind: Literal['perm'] = Field(description='Permutation generators')
    degree: int = Field(ge=0, description='Number of points')
    generators: list[list[int]] = Field(default_factory=list, description='One-line images, 0- or 1-based')


class DiagonalPresentationParam(SchemaBase):
    kind: Literal['diagonal'] = Field(description='Diagonal phase generators in (Q/Z)^n')
    phases: list[list[tuple[int, int]]] = Field(description='[num, den] per coordinate per generator')
    dimension: int | None = Field(default=None, ge=0, description='Ambient dimension, needed without generators')

    @field_validator('phases')
    @classmethod
    def validate_phases(cls, phases: list[list[tuple[int, int]]]) -> list[list[tuple[int, int]]]:
        widths = {len(g) for g in phases}
        if len(widths) > 1:
            raise ValueError('all phase generators must have the same length')
        for g in phases:
            for _, den in g:
                if den == 0:
                    raise ValueError('phase denominator must be non-zero')
        return phases


class TablePresentationParam(SchemaBase):
    kind: Literal['table'] = Field(description='Explicit multiplication table')
    table: list[list[int]] = Field(description='table[a][b] = a*b over element ids 0..n-1')


GroupPresentationParam = Annotated[
    Union[PermPresentationParam, DiagonalPresentationParam, TablePresentationParam],
    Field(discriminator='kind'),
]


class GroupInfoParam(SchemaBase):
    group: GroupPresentationParam
