#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import sys

from collections.abc import Sequence

import click

from backend.app.equivariant.api.router import cli
from backend.common.exception.exception_handlers import exception_payload
from backend.common.log import log
from backend.common.response.response_code import CustomExitCode
from backend.core.config import settings
from backend.utils.serializers import encode_json


def create_app() -> click.Group:
    """The command line application"""
    return cli


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run one command line invocation

    :param argv: arguments without the program name, defaults to sys.argv[1:]
    :return: exit code, 0 on success, 1 on domain errors, 2 on usage errors
    """
    app = create_app()
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        code = app.main(args=args, prog_name=settings.app_name, standalone_mode=False)
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return CustomExitCode.USAGE_ERROR.code
    except click.ClickException as e:
        e.show()
        return CustomExitCode.USAGE_ERROR.code
    except Exception as e:
        payload = exception_payload(e)
        log.debug(f'{args}: {payload}')
        click.echo(encode_json(payload), nl=False)
        return CustomExitCode.DOMAIN_ERROR.code
    # --help and --version return their exit code, commands return None
    return code if isinstance(code, int) else CustomExitCode.SUCCESS.code


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
