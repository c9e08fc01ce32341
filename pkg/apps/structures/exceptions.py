from django.core.exceptions import ValidationError


class StructureError(Exception):
    """Base class for errors raised by the information analysis of structures."""


class GraphValidationError(ValidationError):
    """
    A graph violates one of the structural preconditions.

    Each subclass carries a stable ``code`` and the first offending element
    (a vertex index or an edge pair) in ``element``.
    """
    code = 'invalid'

    def __init__(self, message, element=None):
        super().__init__(message, code=self.code)
        self.element = element

    def __str__(self):
        return self.message


class EmptyGraph(GraphValidationError):
    code = 'empty'


class Disconnected(GraphValidationError):
    code = 'disconnected'


class SelfLoop(GraphValidationError):
    code = 'self_loop'


class DuplicateEdge(GraphValidationError):
    code = 'duplicate_edge'


class UnknownVertex(GraphValidationError):
    code = 'unknown_vertex'


class BadBaseNode(GraphValidationError):
    code = 'bad_base_node'


class ParseError(StructureError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoBaseNode(StructureError):
    pass


class EmptySystem(StructureError):
    """The union matrix has no rows, so the contour entropies are undefined."""


class DimensionMismatch(StructureError):
    pass


class AllZero(StructureError):
    pass


class InvalidParameter(StructureError):
    def __init__(self, message, parameter=None):
        super().__init__(message)
        self.parameter = parameter


class NonPositiveParameter(InvalidParameter):
    pass


class TooLarge(InvalidParameter):
    pass


# Errors caused by the caller's input rather than by a defect in the code.
INPUT_ERRORS = (GraphValidationError, ParseError, NoBaseNode, InvalidParameter, OSError)
