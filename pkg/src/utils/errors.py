"""Custom error classes for the polymatroid toolkit."""

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3


class PolymatroidError(Exception):
    """Base error for all library and command failures."""

    exit_code = EXIT_CHECK_FAILED

    def __init__(self, message: str, operation: str = ""):
        self.operation = operation
        super().__init__(message)


class LengthMismatchError(PolymatroidError):
    """Raised when two exponent vectors live in different ambient rings."""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, left: int, right: int, operation: str = "multiply"):
        super().__init__(
            f"Exponent vectors have different lengths ({left} vs {right}).",
            operation=operation,
        )
        self.left = left
        self.right = right


class ZeroExponentError(PolymatroidError):
    """Raised when an exchange divides by a variable that does not occur."""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, variable: int):
        super().__init__(
            f"Cannot divide by x{variable + 1}: its exponent is zero.",
            operation="exchange",
        )
        self.variable = variable


class EmptyBasisError(PolymatroidError):
    """Raised when a basis would have no elements."""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, message: str = "A monomial basis must contain at least one monomial."):
        super().__init__(message, operation="basis")


class PreconditionViolationError(PolymatroidError):
    """Raised when an operation is called outside its domain."""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, message: str, operation: str = ""):
        super().__init__(message, operation=operation)


class InternalInconsistencyError(PolymatroidError):
    """Raised when two independent computations disagree."""

    exit_code = EXIT_CHECK_FAILED

    def __init__(self, message: str, operation: str = ""):
        super().__init__(f"Internal inconsistency: {message}", operation=operation)


class FiberTooLargeError(PolymatroidError):
    """Raised when a fiber exceeds the configured size cap."""

    exit_code = EXIT_RESOURCE_CAP

    def __init__(self, target: tuple[int, ...], cap: int, degree: int | None = None):
        where = f" in degree {degree}" if degree is not None else ""
        super().__init__(
            f"Fiber over {target}{where} has more than {cap} elements.",
            operation="fiber",
        )
        self.target = target
        self.cap = cap
        self.degree = degree


class GroebnerTimeoutError(PolymatroidError):
    """Raised when Buchberger's algorithm exceeds its step cap."""

    exit_code = EXIT_RESOURCE_CAP

    def __init__(self, steps: int):
        super().__init__(
            f"Buchberger step cap reached after {steps} S-pair reductions.",
            operation="buchberger",
        )
        self.steps = steps


class NotStabilizedError(PolymatroidError):
    """Raised when the h-vector has not visibly terminated."""

    exit_code = EXIT_RESOURCE_CAP

    def __init__(self, max_degree: int):
        super().__init__(
            f"h-vector not stabilized up to degree {max_degree}; raise --max-degree.",
            operation="h_vector",
        )
        self.max_degree = max_degree


class ParseError(PolymatroidError):
    """Raised when an input file cannot be parsed."""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, message: str, line_number: int | None = None, path: str = ""):
        location = path or "<input>"
        if line_number is not None:
            location = f"{location}:{line_number}"
        super().__init__(f"{location}: {message}", operation="parse")
        self.line_number = line_number
        self.path = path
