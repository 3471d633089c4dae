#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Any

from pydantic import ValidationError

from backend.common.exception.exception import BaseError, errors
from backend.common.log import log
from backend.common.response.response_code import CustomExitCode


def validation_exception_handler(exc: ValidationError, prefix: str = '') -> BaseError:
    """
    Turn a pydantic validation error into an input error naming the offending path

    :param exc:
    :param prefix: path of the validated document inside the input
    :return:
    """
    first = exc.errors()[0]
    loc = '.'.join(str(x) for x in first['loc'])
    path = '.'.join(x for x in (prefix, loc) if x) or '$'
    return errors.InputError(msg=f'{first["msg"]} (at {path})', path=path)


def base_exception_handler(exc: BaseError) -> dict[str, Any]:
    """Structured error object of a domain error"""
    payload = {'error': exc.msg, 'code': exc.code or CustomExitCode.DOMAIN_ERROR.code}
    if exc.path is not None:
        payload['path'] = exc.path
    return payload


def general_exception_handler(exc: Exception) -> dict[str, Any]:
    """Unexpected failure: logged with its traceback, reported without one"""
    log.opt(exception=exc).error(f'Unhandled exception: {exc!r}')
    return {'error': 'internal error', 'code': CustomExitCode.DOMAIN_ERROR.code}


def exception_payload(exc: Exception) -> dict[str, Any]:
    if isinstance(exc, ValidationError):
        exc = validation_exception_handler(exc)
    if isinstance(exc, BaseError):
        return base_exception_handler(exc)
    return general_exception_handler(exc)
