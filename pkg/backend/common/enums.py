#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from enum import Enum
from typing import Type


class _EnumBase:
    @classmethod
    def get_member_values(cls: Type[Enum]) -> list:
        return [item.value for item in cls.__members__.values()]


class StrEnum(_EnumBase, str, Enum):
    """String enum"""

    pass


class PresentationKind(StrEnum):
    """Group presentation kind"""

    perm = 'perm'
    diagonal = 'diagonal'
    table = 'table'


class BlockKind(StrEnum):
    """Atom of an invertible polynomial"""

    fermat = 'fermat'
    chain = 'chain'
    loop = 'loop'


class InversionFlavor(StrEnum):
    """Poset used by the Moebius inversion of fixed-set indices"""

    conj = 'conj'
    sub = 'sub'
    both = 'both'


class OutputFormat(StrEnum):
    """CLI output format"""

    json = 'json'
    tsv = 'tsv'
