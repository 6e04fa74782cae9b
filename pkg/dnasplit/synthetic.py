"""Seeded generators of human-like and bot-like DNA corpora."""
from dataclasses import dataclass
import logging

import numpy

from dnasplit.dna import ActionKind
from dnasplit.dna import ActionRecord
from dnasplit.dna import AccountGroup
from dnasplit.dna import AlphabetId
from dnasplit.dna import DnaSequence
from dnasplit.dna import Label
from dnasplit.dna import Timeline
from dnasplit.dna import get_alphabet
from dnasplit.dna import get_alphabet_id
from dnasplit.exceptions import InvalidConfigurationError

log = logging.getLogger(__name__)

DEFAULT_SEED = 0
DOMINANT_BASE_PROBABILITY = 0.7
ACTION_INTERVAL = 60


@dataclass(frozen=True)
class GeneratorConfig:
    alphabet_id: AlphabetId = AlphabetId.TYPE3
    n_accounts: int = 100
    min_length: int = 200
    max_length: int = 200
    template_length: int = 0
    noise_rate: float = 0.0
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        object.__setattr__(
            self, 'alphabet_id', get_alphabet_id(self.alphabet_id))
        if self.n_accounts < 1:
            raise InvalidConfigurationError(
                "n_accounts must be at least 1, got {0}".format(
                    self.n_accounts))
        if not 1 <= self.min_length <= self.max_length:
            raise InvalidConfigurationError(
                "Invalid length range [{0}, {1}]".format(
                    self.min_length, self.max_length))
        if not 0 <= self.template_length <= self.min_length:
            raise InvalidConfigurationError(
                "template_length {0} must lie in [0, {1}]".format(
                    self.template_length, self.min_length))
        if not 0 <= self.noise_rate <= 1:
            raise InvalidConfigurationError(
                "noise_rate must lie in [0, 1], got {0}".format(
                    self.noise_rate))

    @property
    def alphabet(self):
        return get_alphabet(self.alphabet_id)


def _spell(bases, codes):
    return ''.join(bases[code] for code in codes)


def _lengths(config, rng):
    return rng.integers(
        config.min_length, config.max_length + 1, size=config.n_accounts)


def sample_humans(config, prefix='human'):
    """Sequences drawn uniformly over the alphabet."""
    rng = numpy.random.default_rng(config.seed)
    bases = config.alphabet.bases
    sequences = []
    for i, length in enumerate(_lengths(config, rng)):
        codes = rng.integers(0, len(bases), size=length)
        sequences.append(DnaSequence(
            '{0}-{1:04d}'.format(prefix, i), config.alphabet_id,
            _spell(bases, codes), Label.GENUINE))
    return sequences


def sample_bots(config, prefix='bot'):
    """Sequences sharing one planted template over a filler dominated by
    a single base.

    Each template position is replaced by a different base with
    probability ``noise_rate``.
    """
    rng = numpy.random.default_rng(config.seed)
    bases = config.alphabet.bases
    size = len(bases)

    template = rng.integers(0, size, size=config.template_length)
    dominant = rng.integers(0, size)
    weights = numpy.full(
        size, (1 - DOMINANT_BASE_PROBABILITY) / (size - 1))
    weights[dominant] = DOMINANT_BASE_PROBABILITY

    sequences = []
    for i, length in enumerate(_lengths(config, rng)):
        codes = rng.choice(size, size=length, p=weights)
        offset = rng.integers(0, length - config.template_length + 1)
        planted = template.copy()
        if config.noise_rate:
            corrupted = rng.random(config.template_length) \
                < config.noise_rate
            shifts = rng.integers(1, size, size=config.template_length)
            planted = numpy.where(
                corrupted, (planted + shifts) % size, planted)
        codes[offset:offset + config.template_length] = planted
        sequences.append(DnaSequence(
            '{0}-{1:04d}'.format(prefix, i), config.alphabet_id,
            _spell(bases, codes), Label.SPAMBOT))
    log.debug(
        "Sampled %d bots around a %d-base template",
        len(sequences), config.template_length)
    return sequences


def gen_humans(config):
    return AccountGroup(sample_humans(config))


def gen_bots(config):
    return AccountGroup(sample_bots(config))


def gen_mixed(humans_config, bots_config):
    """Planted bots followed by humans.

    :returns: ``(group, labels)`` with labels keyed by account id.
    """
    sequences = sample_bots(bots_config) + sample_humans(humans_config)
    group = AccountGroup(sequences)
    return group, group.labels()


_PROTOTYPES = {
    AlphabetId.TYPE3: {
        'A': dict(kind=ActionKind.TWEET),
        'C': dict(kind=ActionKind.REPLY),
        'T': dict(kind=ActionKind.RETWEET),
    },
    AlphabetId.CONTENT3: {
        'N': dict(),
        'E': dict(has_url=True),
        'X': dict(has_url=True, has_hashtag=True),
    },
    AlphabetId.CONTENT6: {
        'N': dict(),
        'U': dict(has_url=True),
        'H': dict(has_hashtag=True),
        'M': dict(has_mention=True),
        'D': dict(has_media=True),
        'X': dict(has_url=True, has_hashtag=True),
    },
}


def synthesize_timelines(sequences, start_ts=0):
    """Timelines whose encoding reproduces each sequence's symbols."""
    timelines = []
    for sequence in sequences:
        prototypes = _PROTOTYPES[sequence.alphabet_id]
        actions = []
        for i, symbol in enumerate(sequence.symbols):
            fields = dict(kind=ActionKind.TWEET)
            fields.update(prototypes[symbol])
            actions.append(ActionRecord(
                sequence.account_id,
                timestamp=start_ts + i * ACTION_INTERVAL, **fields))
        timelines.append(
            Timeline(sequence.account_id, tuple(actions), sequence.label))
    return timelines


def permute_group(group, rng):
    """Shuffles the symbols of every sequence independently."""
    permuted = []
    for sequence in group.sequences:
        symbols = list(sequence.symbols)
        rng.shuffle(symbols)
        permuted.append(DnaSequence(
            sequence.account_id, sequence.alphabet_id, ''.join(symbols),
            sequence.label))
    return AccountGroup(tuple(permuted))
