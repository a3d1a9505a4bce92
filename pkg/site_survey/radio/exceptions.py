"""Errors raised by the radio toolkit."""


class SurveyError(Exception):
    """Base class for every error the toolkit raises on purpose."""


class DomainError(SurveyError, ValueError):
    """A numeric input is outside the domain of the operation."""


class InsufficientDataError(SurveyError):
    def __init__(self, message='insufficient data'):
        super().__init__(message)


class DegenerateAbscissaError(SurveyError):
    def __init__(self, message='degenerate abscissa'):
        super().__init__(message)


class ModelNotInvertibleError(SurveyError):
    def __init__(self, message='model not invertible'):
        super().__init__(message)


class NoSurveysError(SurveyError):
    def __init__(self, message='no surveys'):
        super().__init__(message)


class SurveyFormatError(SurveyError):
    """A survey or model file could not be parsed.

    ``line`` is the 1-based line number of the offending row, when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        self.reason = message
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)
