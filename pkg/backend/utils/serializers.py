#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from enum import Enum
from fractions import Fraction
from typing import Any

import msgspec
import numpy as np
import pandas as pd

from backend.common.exception.exception import errors


def _enc_hook(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        # Fraction keeps den > 0 and gcd(num, den) = 1
        return {'num': obj.numerator, 'den': obj.denominator}
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    raise NotImplementedError(f'Cannot serialize {type(obj).__name__}')


_encoder = msgspec.json.Encoder(enc_hook=_enc_hook, order='sorted')


def to_builtins(obj: Any) -> Any:
    """
    Plain JSON-compatible values with rationals as {"num", "den"} objects

    :param obj:
    :return:
    """
    return msgspec.to_builtins(obj, enc_hook=_enc_hook, order='sorted')


def encode_json(obj: Any) -> bytes:
    """
    Canonical JSON: sorted keys, exact rationals, trailing newline

    :param obj:
    :return:
    """
    return _encoder.encode(obj) + b'\n'


def decode_json(data: bytes | str) -> Any:
    """
    Parse an input document

    :param data:
    :return:
    """
    try:
        return msgspec.json.decode(data)
    except msgspec.DecodeError as e:
        raise errors.InputError(msg=f'Malformed JSON: {e}', path='$')


def _cell(value: Any) -> Any:
    if isinstance(value, (list, dict)):
        return _encoder.encode(value).decode()
    if isinstance(value, Enum):
        return value.value
    return value


def encode_tsv(obj: Any) -> str:
    """
    Flatten a result (or a list of results) into a TSV table with sorted columns

    :param obj:
    :return:
    """
    data = to_builtins(obj)
    records = data if isinstance(data, list) else [data]
    records = [r if isinstance(r, dict) else {'value': r} for r in records]
    frame = pd.json_normalize(records)
    frame = frame.reindex(sorted(frame.columns), axis=1)
    frame = frame.apply(lambda column: column.map(_cell))
    return frame.to_csv(sep='\t', index=False, lineterminator='\n')
