#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pydantic import ConfigDict, Field

from backend.app.equivariant.schema.group import GroupPresentationParam, SchemaBase


class StratumParam(SchemaBase):
    model_config = ConfigDict(extra='forbid', frozen=True, populate_by_name=True)

    cls: str = Field(alias='class', description='Isotropy class label')
    chi: int = Field(description='Euler characteristic of the quotient stratum')


class StrataParam(SchemaBase):
    group: GroupPresentationParam
    strata: list[StratumParam] = Field(default_factory=list)


class ComplexParam(SchemaBase):
    vertices: list[int | str] = Field(description='Vertex ids')
    simplices: list[list[int | str]] = Field(default_factory=list, description='Facets; faces are added')
    action: dict[str, list[int | str]] = Field(
        default_factory=dict, description='Per generator the image of every vertex, in vertex order'
    )
    subdivide: bool = Field(default=False, description='Subdivide once before computing')
