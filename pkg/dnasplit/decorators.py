from functools import wraps


class ValidationErrorWrapper(object):
    """Converts foreign validation errors to ``error_class`` and tags
    every error with the input line it came from.

    :param error_class: class for errors not derived from ``base_class``.
    :param base_class: errors of this class pass through unchanged.
    """

    def __init__(self, error_class, base_class=None):
        self.error_class = error_class
        self.base_class = base_class or error_class

    def __call__(self, f):
        @wraps(f)
        def wrapper(validator, record, lineno=None):
            for err in f(validator, record):
                if not isinstance(err, self.base_class):
                    # wrap jsonschema errors with the package version
                    err = self.error_class.create_from(err)
                if lineno is not None:
                    err.at_line(lineno)
                yield err
        return wrapper
