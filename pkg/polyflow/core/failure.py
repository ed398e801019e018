# -*- coding: utf-8 -*-
"""The errors raised by polyflow, and how they are reported.

Undefinedness and divergence are never errors: they are outcomes of a run.
"""
import traceback


class PolyflowError(Exception):
    """Base polyflow error"""


class ShapeMismatch(PolyflowError):
    """A value does not have the shape an operation needs."""


class CodMismatch(ShapeMismatch):
    """The codomain of one map is not the domain of the next."""


class BlockMismatch(ShapeMismatch):
    """A polynomial does not split into the expected blocks."""


class BoxMismatch(ShapeMismatch):
    """A diagram is plugged into a box of a different interface."""


class LabelMismatch(ShapeMismatch):
    """A direction is wired to a direction of another label."""


class IndexOutOfRange(PolyflowError, IndexError):
    """A summand, direction or slot index does not exist."""


class IllFormedElem(PolyflowError):
    """An element does not belong to the polynomial it is applied at."""


class IllFormedStart(PolyflowError):
    """A trajectory start is not an element of the outer entrance."""


class UnknownPrimitive(PolyflowError, KeyError):
    """No primitive filler is registered under the requested name."""

    def __str__(self):
        return PolyflowError.__str__(self)


class DomainTooLarge(PolyflowError):
    """An enumeration would exceed the configured bound."""


class PreconditionViolated(PolyflowError):
    """The arguments violate a documented precondition."""


class ParseError(PolyflowError):
    """A document could not be read."""

    def __init__(self, message, line=None, column=None, path=()):
        self.line = line
        self.column = column
        self.path = tuple(path)
        where = []
        if line is not None:
            where.append("line %s" % line)
        if column is not None:
            where.append("column %s" % column)
        if self.path:
            where.append("at %s" % format_path(self.path))
        if where:
            message = "%s (%s)" % (message, ", ".join(where))
        PolyflowError.__init__(self, message)


class ValidationError(PolyflowError):
    """A document parsed but breaks an invariant."""

    def __init__(self, message, path=(), invariant=None):
        self.path = tuple(path)
        self.invariant = invariant
        if invariant:
            message = "%s: %s" % (invariant, message)
        if self.path:
            message = "%s: %s" % (format_path(self.path), message)
        PolyflowError.__init__(self, message)


class InvariantFailure(PolyflowError):
    """An internal self-check failed."""


def format_path(path):
    return "/" + "/".join(str(p) for p in path)


def format_failure(ex):
    """Renders an exception for stderr; internal errors get their
    traceback."""
    if isinstance(ex, PolyflowError) and not isinstance(ex, InvariantFailure):
        return "error: %s" % ex
    tb = "".join(traceback.format_tb(ex.__traceback__))
    return "internal error: %s: %s\n%s" % (type(ex).__name__, ex, tb)
