"""Exception hierarchy shared by every module in the package."""


class PolyCliqueError(Exception):
    """Base class for all errors raised by polyclique."""


class GraphError(PolyCliqueError, ValueError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop on vertex {u}")
        self.u = u


class OutOfRangeError(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} outside 1..{n}")
        self.u = u
        self.n = n


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u},{v})")
        self.u = u
        self.v = v


class InvalidProbabilityError(GraphError):
    pass


class InvalidKError(GraphError):
    pass


class ParseError(PolyCliqueError, ValueError):
    """Raised for malformed DIMACS or JSON graph input."""


class MissingProblemLineError(ParseError):
    pass


class EdgeCountMismatchError(ParseError):
    def __init__(self, declared: int, found: int):
        super().__init__(f"declared {declared} edges, found {found}")
        self.declared = declared
        self.found = found


class MalformedLineError(ParseError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: cannot parse {line!r}")
        self.lineno = lineno
        self.line = line


class InvalidArcIndexError(PolyCliqueError, IndexError):
    pass


class TooLargeError(PolyCliqueError):
    """An exhaustive enumeration would exceed the caller's limit."""


class NegativeBudgetError(PolyCliqueError, ValueError):
    """C(K,2) exceeds |E|, so no K-clique can exist."""


class KOutOfRangeError(PolyCliqueError, ValueError):
    pass


class TraceGraphMismatchError(PolyCliqueError, ValueError):
    pass
