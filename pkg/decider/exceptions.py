# ordered-structures-qe -- decider/exceptions.py


class DeciderError(Exception):
    """Base class for every error raised by the decider app."""


class ParseError(DeciderError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = '{} (line {}, column {})'.format(message, line, column)
        super().__init__(message)


class SignatureError(DeciderError):
    def __init__(self, symbol, theory):
        self.symbol = symbol
        self.theory = theory
        super().__init__("symbol '{}' is not in the signature of {}".format(symbol, theory))


class OpenFormulaError(DeciderError):
    def __init__(self, variables):
        self.variables = sorted(variables)
        super().__init__('formula has free variables: {}'.format(', '.join(self.variables)))


class EvaluationError(DeciderError):
    pass


class NumericError(DeciderError, ValueError):
    pass


class WitnessError(DeciderError):
    """A constructed witness failed exact re-verification. Always an engine bug."""


class WitnessUnavailable(DeciderError):
    """The structure has a witness but none of them is rational."""
