# -*- coding: utf-8 -*-
from dnasplit.dna import AlphabetId
from dnasplit.factories import RecordValidatorFactory
from dnasplit.handlers import LabelsHandler
from dnasplit.handlers import SequencesHandler
from dnasplit.handlers import TimelinesHandler
from dnasplit.schemas import get_schema
from dnasplit.shortcuts import encode_factory
from dnasplit.shortcuts import ingest_factory

__version__ = '0.1.0'
__license__ = 'Apache License, Version 2.0'

__all__ = [
    'timelines_handler',
    'sequences_handler',
    'labels_handler',
    'config_validator_factory',
    'ingest_timelines',
    'read_sequences',
    'read_labels',
    'encode_type3',
    'encode_content3',
    'encode_content6',
]

# input records
timeline_validator_factory = RecordValidatorFactory(get_schema('timeline'))
timelines_handler = TimelinesHandler(timeline_validator_factory)

sequence_validator_factory = RecordValidatorFactory(get_schema('sequence'))
sequences_handler = SequencesHandler(sequence_validator_factory)

label_validator_factory = RecordValidatorFactory(get_schema('label'))
labels_handler = LabelsHandler(label_validator_factory)

# command defaults file
config_validator_factory = RecordValidatorFactory(get_schema('config'))

# shortcuts
ingest_timelines = ingest_factory(timelines_handler)
read_sequences = ingest_factory(sequences_handler)
read_labels = ingest_factory(labels_handler)

encode_type3 = encode_factory(AlphabetId.TYPE3)
encode_content3 = encode_factory(AlphabetId.CONTENT3)
encode_content6 = encode_factory(AlphabetId.CONTENT6)
