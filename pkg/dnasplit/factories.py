from jsonschema.validators import Draft202012Validator


class RecordValidatorFactory(object):
    """
    Record validators factory against a json schema.

    :param schema: schema for validation.
    """

    schema_validator_class = Draft202012Validator

    def __init__(self, schema):
        self.schema = schema

        self.schema_validator_class.check_schema(self.schema)

    def create(self):
        return self.schema_validator_class(self.schema)
