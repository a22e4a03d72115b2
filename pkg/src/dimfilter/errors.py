class DimFilterError(Exception):
    pass


class ContractError(DimFilterError, ValueError):
    """Input violates an operation's precondition."""


class ResourceError(DimFilterError):
    """A configured budget (coefficient size, variables, degree) was exceeded."""

    def __init__(self, budget, message):
        super().__init__(f"{budget} budget exceeded: {message}")
        self.budget = budget


class ParseError(DimFilterError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
