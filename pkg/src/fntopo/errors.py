"""Exception hierarchy shared by all fntopo modules."""


class FntopoError(Exception):
    """Base class for analysis-domain errors (CLI exit code 1)."""


class DomainEscape(FntopoError):
    def __init__(self, value, step=None):
        self.value = value
        self.step = step
        where = "" if step is None else f" at step {step}"
        super().__init__(f"value {value} left the declared domain{where}")


class TerminalHit(FntopoError):
    def __init__(self, value, remaining):
        self.value = value
        self.remaining = remaining
        super().__init__(f"terminal element {value} reached with {remaining} step(s) remaining")


class UnknownElement(FntopoError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"{value} is not a domain element")


class InvalidFunction(FntopoError):
    """Raised when a table violates totality/closure/non-emptiness."""


class SizeLimit(FntopoError):
    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"{size} classes exceeds the embedding search cutoff of {limit}")


class IndexBelowMemory(FntopoError):
    def __init__(self, n, memory):
        super().__init__(f"accumulator index {n} is below the recurrence memory {memory}")


class ParseError(FntopoError):
    def __init__(self, line, message="malformed line"):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ClosureError(InvalidFunction):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"image {source}->{target} is not a domain element")


class DuplicateError(InvalidFunction):
    def __init__(self, source, line=None):
        self.source = source
        where = "" if line is None else f" (line {line})"
        super().__init__(f"duplicate source {source}{where}")
