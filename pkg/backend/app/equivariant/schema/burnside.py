#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pydantic import ConfigDict, Field

from backend.app.equivariant.schema.group import GroupPresentationParam, SchemaBase


class CoefficientParam(SchemaBase):
    model_config = ConfigDict(extra='forbid', frozen=True, populate_by_name=True)

    cls: str = Field(alias='class', description='Canonical subgroup label H<order>_<index>')
    a: int = Field(description='Coefficient of [G/H]')


class BurnsideElementParam(SchemaBase):
    group: str | None = Field(default=None, description='Group name, informational only')
    coeffs: list[CoefficientParam] = Field(default_factory=list)


class BurnsideGroupParam(SchemaBase):
    group: GroupPresentationParam


class BurnsideElementInputParam(BurnsideGroupParam):
    element: BurnsideElementParam


class BurnsideMulParam(BurnsideGroupParam):
    left: BurnsideElementParam
    right: BurnsideElementParam


class BurnsideSubgroupParam(BurnsideElementInputParam):
    subgroup: str = Field(description='Label of H in the lattice of G')
