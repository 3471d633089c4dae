#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from enum import Enum


class CustomCodeBase(Enum):
    """Base of (code, msg) enumerations"""

    @property
    def code(self):
        """
        Get the code
        """
        return self.value[0]

    @property
    def msg(self):
        """
        Get the message
        """
        return self.value[1]


class CustomExitCode(CustomCodeBase):
    """Process exit codes of the command line"""

    SUCCESS = (0, 'ok')
    DOMAIN_ERROR = (1, 'domain error')
    USAGE_ERROR = (2, 'usage error')
