#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pydantic import ConfigDict, Field, model_validator

from backend.app.equivariant.schema.burnside import BurnsideElementParam
from backend.app.equivariant.schema.group import GroupPresentationParam, SchemaBase


class StratumIndexParam(SchemaBase):
    model_config = ConfigDict(extra='forbid', frozen=True, populate_by_name=True)

    cls: str = Field(alias='class', description='Isotropy class label of the stratum')
    ind: int = Field(description='Total index over the stratum')


class StratumIndexDataParam(SchemaBase):
    group: GroupPresentationParam
    entries: list[StratumIndexParam] = Field(default_factory=list)


class FixedSetIndexParam(SchemaBase):
    group: GroupPresentationParam
    per_subgroup: dict[str, int] = Field(description='Subgroup label -> ind_rad(X; V^H, 0)')
    per_class: dict[str, int] | None = Field(default=None, description='Class label -> ind_rad(X; V^[H], 0)')


class OrbitParam(SchemaBase):
    isotropy: str = Field(description='Label of G_p in the lattice of G')
    local: BurnsideElementParam = Field(description='Local index over G_p, labels from the lattice of G_p')


class InduceOrbitParam(OrbitParam):
    group: GroupPresentationParam


class PoincareHopfParam(SchemaBase):
    group: GroupPresentationParam
    chi: BurnsideElementParam = Field(description='chi^G of the space')
    orbits: list[OrbitParam] = Field(default_factory=list)


class GsvParam(SchemaBase):
    group: GroupPresentationParam
    radial: BurnsideElementParam | None = Field(default=None, description='ind_rad^G')
    chibar: BurnsideElementParam | None = Field(default=None, description='Reduced chi^G of the Milnor fibre')
    k: int | None = Field(default=None, ge=0, description='Dimension of the complete intersection')
    dims: dict[str, int] | None = Field(default=None, description='Subgroup label -> dim Omega on V^K')
    fixed_dims: dict[str, int] | None = Field(default=None, description='Subgroup label -> dim V^K')

    @model_validator(mode='after')
    def validate_mode(self) -> 'GsvParam':
        radial = self.radial is not None and self.chibar is not None
        dims = self.k is not None and self.dims is not None and self.fixed_dims is not None
        if radial == dims:
            raise ValueError('give either radial and chibar, or k, dims and fixed_dims')
        return self
