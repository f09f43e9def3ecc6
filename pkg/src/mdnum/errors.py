"""Exception hierarchy shared by every module."""


class MDError(Exception):
    """Base class for all mdnum errors."""


class ParseError(MDError, ValueError):
    """Malformed graph6, edge-list or coloring text."""

    def __init__(self, message, *, offset=None, line=None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class ContractError(MDError, ValueError):
    """A precondition of an operation was violated by the caller."""


class StructureError(ContractError):
    """The input graph lacks a required structural property (e.g. 2-connectivity)."""


class ResourceError(MDError):
    """A size limit or search budget was exceeded.

    ``lower`` and ``upper`` carry the best known bounds on the quantity that
    was being computed, when there is one.
    """

    def __init__(self, message, *, lower=None, upper=None):
        if lower is not None or upper is not None:
            message = f"{message} [bounds: {lower}..{upper}]"
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class InvariantBreach(MDError, RuntimeError):
    """An internal invariant failed; indicates a bug or a false theorem."""


class NotMDColoring(MDError):
    """Raised by ``verify_md`` when some vertex pair is not separated."""

    def __init__(self, pair):
        super().__init__(f"no monochromatic edge-cut separates {pair[0]} and {pair[1]}")
        self.pair = pair
