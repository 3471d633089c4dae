#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import inspect
import logging

from sys import stderr

from loguru import logger

from backend.core.config import settings


class InterceptHandler(logging.Handler):
    """
    Default handler from examples in loguru documentation.
    See https://loguru.readthedocs.io/en/stable/overview.html#entirely-compatible-with-standard-logging
    """

    def emit(self, record: logging.LogRecord):
        # Get corresponding Loguru level if it exists
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Find caller from where originated the logged message.
        frame, depth = inspect.currentframe(), 0
        while frame and (depth == 0 or frame.f_code.co_filename == logging.__file__):
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def setup_logging(level: str | None = None) -> None:
    """
    Route stdlib logging through loguru and send everything to stderr

    stdout is reserved for command results, so there is a single stderr sink.

    :param level: log level, defaults to settings.log_level
    :return:
    """
    level = (level or settings.log_level).upper()

    # Intercept everything at the root logger
    logging.root.handlers = [InterceptHandler()]
    logging.root.setLevel(level)

    for name in logging.root.manager.loggerDict.keys():
        logging.getLogger(name).handlers = []
        logging.getLogger(name).propagate = True

    # Remove every other logger's handlers
    logger.remove()
    logger.configure(
        handlers=[
            {
                'sink': stderr,
                'level': level,
                'format': settings.log_format,
                'diagnose': False,
            },
        ]
    )


setup_logging()

log = logger
