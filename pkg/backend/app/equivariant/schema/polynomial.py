#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pydantic import Field, field_validator

from backend.app.equivariant.schema.group import DiagonalPresentationParam, SchemaBase


class PolynomialParam(SchemaBase):
    E: list[list[int]] = Field(description='Exponent matrix, row i is the i-th monomial')
    subgroup: str | None = Field(default=None, description='Label of a subgroup of G_f, defaults to G_f')
    group: DiagonalPresentationParam | None = Field(default=None, description='Explicit group of diagonal symmetries')

    @field_validator('E')
    @classmethod
    def validate_exponents(cls, E: list[list[int]]) -> list[list[int]]:
        if any(len(row) != len(E) for row in E):
            raise ValueError('exponent matrix must be square')
        if any(x < 0 for row in E for x in row):
            raise ValueError('exponents must be non-negative')
        return E
