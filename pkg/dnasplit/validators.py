import logging

from dnasplit.decorators import ValidationErrorWrapper
from dnasplit.dna import get_alphabet
from dnasplit.exceptions import DuplicateAccountIDError
from dnasplit.exceptions import MalformedRecordError
from dnasplit.exceptions import RecordValidationError
from dnasplit.exceptions import UnknownActionKindError
from dnasplit.exceptions import UnknownSymbolError

log = logging.getLogger(__name__)

wraps_errors = ValidationErrorWrapper(
    MalformedRecordError, base_class=RecordValidationError)


class RecordValidator(object):
    """Validates one decoded input line against a record schema and
    rejects account ids already seen in the same stream."""

    def __init__(self, validator_factory, seen_ids=None):
        self.validator_factory = validator_factory
        self.seen_ids = set() if seen_ids is None else seen_ids

    def validate(self, record, lineno=None):
        for err in self.iter_errors(record, lineno=lineno):
            raise err

    @wraps_errors
    def iter_errors(self, record):
        validator = self.validator_factory.create()
        valid = True
        for err in validator.iter_errors(record):
            valid = False
            yield self._convert(err)
        if not valid:
            return

        account_id = record['account_id']
        if account_id in self.seen_ids:
            yield DuplicateAccountIDError(
                "Account ID '{0}' is not unique".format(account_id))
        self.seen_ids.add(account_id)

        for err in self._iter_content_errors(record):
            yield err

    def _convert(self, err):
        return err

    def _iter_content_errors(self, record):
        return iter(())


class TimelineValidator(RecordValidator):

    def _convert(self, err):
        if err.validator == 'enum' and list(err.path)[-1:] == ['kind']:
            return UnknownActionKindError(
                "Unknown action kind {0!r} in actions[{1}]".format(
                    err.instance, err.path[1]))
        return err


class SequenceValidator(RecordValidator):

    def _iter_content_errors(self, record):
        alphabet = get_alphabet(record['alphabet'])
        unknown = sorted(set(record['symbols']) - set(alphabet.bases))
        if unknown:
            yield UnknownSymbolError(
                "Symbols {0} of account '{1}' are not {2} bases".format(
                    unknown, record['account_id'], alphabet.id.value))


class LabelValidator(RecordValidator):
    pass
