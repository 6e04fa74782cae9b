"""Line-delimited JSON stream handlers."""
import json
import logging

from dnasplit.dna import ActionRecord
from dnasplit.dna import DnaSequence
from dnasplit.dna import Timeline
from dnasplit.dna import get_label
from dnasplit.exceptions import MalformedRecordError
from dnasplit.validators import LabelValidator
from dnasplit.validators import SequenceValidator
from dnasplit.validators import TimelineValidator

log = logging.getLogger(__name__)


class BaseHandler(object):
    """Decodes and validates one record per non-blank line.

    :param validator_factory: factory of the record schema validator.
    """

    validator_class = None

    def __init__(self, validator_factory):
        self.validator_factory = validator_factory

    def __call__(self, stream):
        validator = self.validator_class(self.validator_factory)
        items = [self.build(record)
                 for record in self.iter_records(stream, validator)]
        if not items:
            log.warning("Input stream holds no records")
        return self.collect(items)

    def iter_records(self, stream, validator):
        for lineno, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except ValueError as exc:
                raise MalformedRecordError(
                    "Invalid JSON: {0}".format(exc)).at_line(lineno)
            validator.validate(record, lineno=lineno)
            yield record

    def build(self, record):
        raise NotImplementedError

    def collect(self, items):
        return items


class TimelinesHandler(BaseHandler):
    """Builds one :class:`Timeline` per line, actions sorted by time.

    Entity counts collapse to flags; raw ``is_reply`` / ``is_retweet``
    flags override ``kind``.
    """

    validator_class = TimelineValidator

    def build(self, record):
        account_id = record['account_id']
        actions = [
            ActionRecord.from_flags(
                account_id,
                kind=action['kind'],
                is_reply=action.get('is_reply', False),
                is_retweet=action.get('is_retweet', False),
                has_url=action.get('urls', 0) > 0,
                has_hashtag=action.get('hashtags', 0) > 0,
                has_mention=action.get('mentions', 0) > 0,
                has_media=action.get('media', 0) > 0,
                timestamp=action['ts'],
            )
            for action in record['actions']]
        actions.sort(key=lambda action: action.timestamp)
        return Timeline(
            account_id, tuple(actions), get_label(record.get('label')))


class SequencesHandler(BaseHandler):

    validator_class = SequenceValidator

    def build(self, record):
        return DnaSequence(
            record['account_id'], record['alphabet'], record['symbols'],
            get_label(record.get('label')))


class LabelsHandler(BaseHandler):
    """Maps account ids to labels; sequence files are accepted too."""

    validator_class = LabelValidator

    def build(self, record):
        return record['account_id'], get_label(record.get('label'))

    def collect(self, items):
        return dict(items)
