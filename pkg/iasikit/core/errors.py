# Copyright (c) iasikit authors. All rights reserved.
from typing import Any, Optional, Tuple


class IasiError(Exception):
    r"""Root of every error raised by iasikit."""
    def __init__(self, message: str):
        self.message = message
        super(IasiError, self).__init__(message)


class InvalidArgumentError(IasiError, ValueError):
    pass


class ParseError(InvalidArgumentError):
    r"""A text, JSON or edge-list input could not be parsed.

    Args:
        message (str): what went wrong
        line (int, optional): 1-based line number. Defaults to None.
        column (int, optional): 1-based column number. Defaults to None.
        source (str, optional): file name or "<string>". Defaults to None.
    """
    def __init__(self,
                 message: str,
                 line: Optional[int] = None,
                 column: Optional[int] = None,
                 source: Optional[str] = None):
        self.line = line
        self.column = column
        self.source = source
        where = source or "<string>"
        if line is not None:
            where += f":{line}"
        if column is not None:
            where += f":{column}"
        super(ParseError, self).__init__(f"{where}: {message}")


class NotFoundError(IasiError, LookupError):
    pass


class MissingLabelError(NotFoundError):
    pass


class PreconditionError(IasiError, ValueError):
    pass


class LabelCollisionError(IasiError, ValueError):
    def __init__(self, message: str, pair: Tuple[Any, Any]):
        self.pair = pair
        super(LabelCollisionError, self).__init__(message)


class IasiViolationError(IasiError):
    def __init__(self, verdict: Any):
        self.verdict = verdict
        super(IasiViolationError, self).__init__(verdict.message)


class ConstructionImpossibleError(IasiError):
    pass
