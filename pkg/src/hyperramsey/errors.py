"""Exception types shared across the package."""


class InvalidEdgeError(ValueError):
    """An edge has the wrong arity, repeated vertices or out-of-range vertices."""


class ParameterError(ValueError):
    """Inconsistent or degenerate (N, m, n, r) parameters."""


class ParseError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InstanceTooLarge(RuntimeError):
    """Raised when an instance needs more (qu)bits than a backend will handle.

    ``qubits`` is the register size that would be required and ``N`` the
    vertex count it belongs to (when known), so callers can report sizes
    such as the 286 qubits needed for N=13, r=3.
    """

    def __init__(self, qubits, limit, N=None, message=None):
        self.qubits = qubits
        self.limit = limit
        self.N = N
        if message is None:
            where = f" at N={N}" if N is not None else ""
            message = f"instance requires {qubits} qubits{where}; limit is {limit}"
        super().__init__(message)


class TooManyTermsError(RuntimeError):
    pass
