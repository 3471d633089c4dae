#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Literal

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Global configuration"""

    # Basics
    app_name: str = Field(default='equivariant-index', description='Application name')
    app_version: str = Field(default='1.0.0', description='Application version')

    # Group construction bounds
    max_group_order: int = Field(default=2000, description='Largest group order build_group will enumerate')
    max_perm_degree: int = Field(default=16, description='Largest number of points a permutation generator may move')
    max_phase_denominator: int = Field(default=10**6, description='Largest denominator of a diagonal phase')
    assoc_exhaustive_order: int = Field(default=64, description='Groups up to this order get an exhaustive associativity audit')
    assoc_samples: int = Field(default=4096, description='Sampled triples for the associativity audit of larger groups')
    assoc_seed: int = Field(default=20240517, description='Seed of the sampled associativity audit')

    # Higher order Euler characteristics
    max_rk_order: int = Field(default=3, description='Largest k accepted by r_k')
    max_rk_tuples: int = Field(default=10**8, description='Upper bound on |G|^(k+1) for commuting-tuple enumeration')

    # Invertible polynomials
    max_symmetry_order: int = Field(default=2000, description='Largest |det E| for symmetry_group')
    max_duality_det: int = Field(default=500, description='Largest |det E| for duality_check')

    # Caches
    cache_size: int = Field(default=1024, description='Entries kept by each per-group cache (lattices, marks, tuple counts, symmetry data)')

    # Logging
    log_level: str = Field(default='WARNING', description='Log level')
    log_format: str = Field(
        default='<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</> | <lvl>{level: <8}</> | <cyan>{name}</>:<cyan>{line}</> - <lvl>{message}</>',
        description='Log format',
    )

    # CLI
    default_format: Literal['json', 'tsv'] = Field(default='json', description='Output format')
    default_jobs: int = Field(default=1, description='Worker count for batch inputs')

    @model_validator(mode='after')
    def validate_bounds(self) -> 'Settings':
        """Validate bound settings"""
        if self.max_rk_order < 0:
            raise ValueError('max_rk_order must be non-negative')
        if self.default_jobs < 1:
            raise ValueError('default_jobs must be positive')
        if self.cache_size < 1:
            raise ValueError('cache_size must be positive')
        return self

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # configuration comes from code defaults and CLI flags only
        return (init_settings,)

    model_config = SettingsConfigDict(case_sensitive=False, validate_assignment=True)


# Global settings instance
settings = Settings()
