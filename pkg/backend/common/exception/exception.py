#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from backend.common.response.response_code import CustomExitCode


class BaseError(Exception):
    """Base error"""

    def __init__(self, msg: str = None, code: int = None, path: str | None = None):
        self.msg = msg
        self.code = code
        self.path = path
        super().__init__(self.msg)


class BoundExceededError(BaseError):
    """A size bound of an enumeration was exceeded"""

    def __init__(self, msg: str = 'Size bound exceeded', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class GroupPresentationError(BaseError):
    """The presentation does not define a finite group"""

    def __init__(self, msg: str = 'Invalid group presentation', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class NotASubgroupError(BaseError):
    """The given set is not a subgroup of the group"""

    def __init__(self, msg: str = 'Not a subgroup', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class UnknownClassError(BaseError):
    """Unknown subgroup or conjugacy class label"""

    def __init__(self, msg: str = 'Unknown subgroup label', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class GroupMismatchError(BaseError):
    """Operands live over different groups"""

    def __init__(self, msg: str = 'Operands are over different groups', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class IntegralityError(BaseError):
    """A value that must be an integer is not"""

    def __init__(self, msg: str = 'Non-integral coefficient', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class InconsistentDataError(BaseError):
    """Input data contradicts itself"""

    def __init__(self, msg: str = 'Inconsistent input data', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class RegularityError(BaseError):
    """An element maps a simplex to itself without fixing its vertices"""

    def __init__(
        self,
        msg: str = 'Action is not regular, subdivide the complex first',
        code: int = CustomExitCode.DOMAIN_ERROR.code,
    ):
        super().__init__(msg, code)


class InvalidPolynomialError(BaseError):
    """The exponent matrix is not an invertible polynomial of a supported shape"""

    def __init__(self, msg: str = 'Invalid invertible polynomial', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class MissingDimensionError(BaseError):
    """A required dimension entry is missing"""

    def __init__(self, msg: str = 'Missing dimension entry', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class PairingError(BaseError):
    """The pairing between dual symmetry groups is degenerate"""

    def __init__(self, msg: str = 'Pairing is not perfect', code: int = CustomExitCode.DOMAIN_ERROR.code):
        super().__init__(msg, code)


class InputError(BaseError):
    """Malformed input document"""

    def __init__(
        self, msg: str = 'Malformed input', code: int = CustomExitCode.DOMAIN_ERROR.code, path: str | None = None
    ):
        super().__init__(msg, code, path)


# Collects the errors behind one name
class Errors:
    BoundExceededError = BoundExceededError
    GroupPresentationError = GroupPresentationError
    NotASubgroupError = NotASubgroupError
    UnknownClassError = UnknownClassError
    GroupMismatchError = GroupMismatchError
    IntegralityError = IntegralityError
    InconsistentDataError = InconsistentDataError
    RegularityError = RegularityError
    InvalidPolynomialError = InvalidPolynomialError
    MissingDimensionError = MissingDimensionError
    PairingError = PairingError
    InputError = InputError


errors = Errors()
