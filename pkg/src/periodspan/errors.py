"""Exception hierarchy shared by every module.

``ValidationError`` covers bad user input (CLI exit code 2);
``InvariantViolation`` signals an internal consistency failure (exit code 3).
"""


class PeriodSpanError(Exception):
    pass


class ValidationError(PeriodSpanError):
    """Input data does not satisfy a documented precondition."""

    def __init__(self, message, problems=None):
        super().__init__(message)
        self.problems = list(problems) if problems else [message]


class GroupTooLarge(ValidationError):
    pass


class ConfigurationError(PeriodSpanError):
    pass


class InvariantViolation(PeriodSpanError):
    pass
