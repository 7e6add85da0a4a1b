"""Exception hierarchy shared by every module."""

from __future__ import annotations


class DendriError(Exception):
    """Base class for all errors raised by dendrikit."""


class FieldMismatch(DendriError, TypeError):
    pass


class DivisionByZero(DendriError, ZeroDivisionError):
    pass


class InfiniteField(DendriError, ValueError):
    pass


class ParseError(DendriError, ValueError):
    pass


class DenominatorZero(ParseError):
    pass


class DimMismatch(DendriError, ValueError):
    pass


class Singular(DendriError, ValueError):
    pass


class ReportError(DendriError):
    """An error that carries the ValidationReport explaining it."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InvalidInput(ReportError):
    pass


class InvalidBimodule(ReportError):
    pass


class InvalidDatum(ReportError):
    pass


class InvalidMatchedPair(ReportError):
    pass


class InvalidCocycleSystem(ReportError):
    pass


class InvalidNonabelianSystem(ReportError):
    pass


class NotAnExtension(ReportError):
    pass


class NotASplitting(ReportError):
    pass


class InvalidFlag(ReportError):
    pass


class InvalidDeformation(ReportError):
    pass


class NotAComplement(ReportError):
    pass


class WrongVDim(DendriError, ValueError):
    pass


class ZeroH0(DendriError, ValueError):
    pass


class SingularDelta(DendriError, ValueError):
    pass


class UnknownTable(DendriError, KeyError):
    def __str__(self) -> str:
        # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class SchemaError(DendriError, ValueError):
    """A JSON document does not match the expected object layout."""
