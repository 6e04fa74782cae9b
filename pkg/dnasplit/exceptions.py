from jsonschema.exceptions import ValidationError


class DnaSplitError(Exception):
    pass


class InvalidInputError(DnaSplitError, ValueError):
    pass


class InvalidConfigurationError(DnaSplitError, ValueError):
    pass


class RecordValidationError(ValidationError):
    """Input line rejected by a record validator."""

    lineno = None

    def at_line(self, lineno):
        self.lineno = lineno
        self.message = "line {0}: {1}".format(lineno, self.message)
        return self


class MalformedRecordError(RecordValidationError):
    pass


class UnknownActionKindError(RecordValidationError):
    pass


class DuplicateAccountIDError(RecordValidationError):
    pass


class UnknownSymbolError(RecordValidationError):
    pass
