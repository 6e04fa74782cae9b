"""Digital DNA alphabets, account timelines and their encoding."""
from collections import Counter
from dataclasses import dataclass
from enum import Enum
import logging

from dnasplit.exceptions import InvalidConfigurationError
from dnasplit.exceptions import InvalidInputError

log = logging.getLogger(__name__)

MAX_TIMELINE_LENGTH = 3200


class AlphabetId(Enum):
    TYPE3 = 'type3'
    CONTENT3 = 'content3'
    CONTENT6 = 'content6'


class ActionKind(Enum):
    TWEET = 'tweet'
    REPLY = 'reply'
    RETWEET = 'retweet'


class Label(Enum):
    SPAMBOT = 'spambot'
    GENUINE = 'genuine'
    UNLABELED = 'unlabeled'


@dataclass(frozen=True)
class Alphabet:
    id: AlphabetId
    bases: str

    def __post_init__(self):
        if len(set(self.bases)) != len(self.bases):
            raise InvalidConfigurationError(
                "Alphabet {0} repeats a base: {1}".format(
                    self.id.value, self.bases))

    @property
    def cardinality(self):
        return len(self.bases)

    def __contains__(self, symbol):
        return len(symbol) == 1 and symbol in self.bases


ALPHABETS = {
    AlphabetId.TYPE3: Alphabet(AlphabetId.TYPE3, 'ACT'),
    AlphabetId.CONTENT3: Alphabet(AlphabetId.CONTENT3, 'NEX'),
    AlphabetId.CONTENT6: Alphabet(AlphabetId.CONTENT6, 'NUHMDX'),
}


def get_alphabet_id(alphabet_id):
    if isinstance(alphabet_id, AlphabetId):
        return alphabet_id
    try:
        return AlphabetId(str(alphabet_id).lower())
    except ValueError:
        raise InvalidConfigurationError(
            "Unknown alphabet '{0}'".format(alphabet_id))


def get_alphabet(alphabet_id):
    return ALPHABETS[get_alphabet_id(alphabet_id)]


def get_label(label):
    if label is None:
        return Label.UNLABELED
    if isinstance(label, Label):
        return label
    try:
        return Label(label)
    except ValueError:
        raise InvalidInputError("Unknown label '{0}'".format(label))


@dataclass(frozen=True)
class ActionRecord:
    account_id: str
    kind: ActionKind
    has_url: bool = False
    has_hashtag: bool = False
    has_mention: bool = False
    has_media: bool = False
    timestamp: int = 0

    def __post_init__(self):
        if self.timestamp < 0:
            raise InvalidInputError(
                "Negative timestamp {0} for account '{1}'".format(
                    self.timestamp, self.account_id))

    @classmethod
    def from_flags(cls, account_id, kind=ActionKind.TWEET, is_reply=False,
                   is_retweet=False, **entities):
        """Builds a record from raw flags; retweet wins over reply."""
        if is_retweet:
            kind = ActionKind.RETWEET
        elif is_reply:
            kind = ActionKind.REPLY
        return cls(account_id, ActionKind(kind), **entities)

    @property
    def entity_flags(self):
        return (self.has_url, self.has_hashtag, self.has_mention,
                self.has_media)


@dataclass(frozen=True)
class Timeline:
    """All actions of one account, oldest first."""
    account_id: str
    actions: tuple
    label: Label = Label.UNLABELED

    def encode(self, alphabet_id):
        return encode_sequence(
            self.actions, alphabet_id, self.label, self.account_id)


@dataclass(frozen=True)
class DnaSequence:
    account_id: str
    alphabet_id: AlphabetId
    symbols: str
    label: Label = Label.UNLABELED

    def __post_init__(self):
        object.__setattr__(
            self, 'alphabet_id', get_alphabet_id(self.alphabet_id))
        object.__setattr__(self, 'label', get_label(self.label))
        alphabet = ALPHABETS[self.alphabet_id]
        unknown = set(self.symbols) - set(alphabet.bases)
        if unknown:
            raise InvalidInputError(
                "Symbols {0} of account '{1}' are not {2} bases".format(
                    sorted(unknown), self.account_id, alphabet.id.value))

    def __len__(self):
        return len(self.symbols)

    @property
    def alphabet(self):
        return ALPHABETS[self.alphabet_id]


@dataclass(frozen=True)
class AccountGroup:
    """Distinct accounts over one alphabet; curves need at least 2."""
    sequences: tuple

    def __post_init__(self):
        sequences = tuple(self.sequences)
        object.__setattr__(self, 'sequences', sequences)
        if not sequences:
            raise InvalidInputError("A group needs at least 1 account")
        seen = set()
        for sequence in sequences:
            if sequence.account_id in seen:
                raise InvalidInputError(
                    "Account '{0}' appears twice in the group".format(
                        sequence.account_id))
            seen.add(sequence.account_id)
        alphabet_ids = {sequence.alphabet_id for sequence in sequences}
        if len(alphabet_ids) > 1:
            raise InvalidInputError(
                "Group mixes alphabets: {0}".format(
                    sorted(a.value for a in alphabet_ids)))

    @classmethod
    def from_sequences(cls, sequences):
        kept = []
        for sequence in sequences:
            if not sequence.symbols:
                log.warning(
                    "Excluding account '%s' with an empty timeline",
                    sequence.account_id)
                continue
            kept.append(sequence)
        return cls(tuple(kept))

    @property
    def size(self):
        return len(self.sequences)

    @property
    def alphabet_id(self):
        return self.sequences[0].alphabet_id

    @property
    def account_ids(self):
        return tuple(sequence.account_id for sequence in self.sequences)

    def labels(self):
        return {s.account_id: s.label for s in self.sequences}

    def subgroup(self, account_ids):
        wanted = set(account_ids)
        return AccountGroup(tuple(
            s for s in self.sequences if s.account_id in wanted))

    def __iter__(self):
        return iter(self.sequences)

    def __len__(self):
        return len(self.sequences)


_TYPE3_BASES = {
    ActionKind.TWEET: 'A',
    ActionKind.REPLY: 'C',
    ActionKind.RETWEET: 'T',
}

# url, hashtag, mention, media
_CONTENT6_SINGLE = 'UHMD'


def _encode_type3(action):
    return _TYPE3_BASES[action.kind]


def _encode_content3(action):
    flags = sum(action.entity_flags)
    if flags == 0:
        return 'N'
    if flags == 1:
        return 'E'
    return 'X'


def _encode_content6(action):
    flags = action.entity_flags
    count = sum(flags)
    if count == 0:
        return 'N'
    if count == 1:
        return _CONTENT6_SINGLE[flags.index(True)]
    return 'X'


ENCODERS = {
    AlphabetId.TYPE3: _encode_type3,
    AlphabetId.CONTENT3: _encode_content3,
    AlphabetId.CONTENT6: _encode_content6,
}


def encode_sequence(actions, alphabet_id, label=Label.UNLABELED,
                    account_id=None):
    """Encodes one account's timeline as a DNA sequence.

    :param actions: the account's :class:`ActionRecord` list.
    :param alphabet_id: :class:`AlphabetId` or its string value.
    :param account_id: id to use when ``actions`` is empty.
    """
    alphabet_id = get_alphabet_id(alphabet_id)
    encoder = ENCODERS[alphabet_id]

    account_ids = {action.account_id for action in actions}
    if len(account_ids) > 1:
        raise InvalidInputError(
            "Timeline mixes accounts: {0}".format(sorted(account_ids)))
    if account_ids:
        account_id = account_ids.pop()

    ordered = sorted(actions, key=lambda action: action.timestamp)
    if len(ordered) > MAX_TIMELINE_LENGTH:
        log.warning(
            "Account '%s' has %d actions, keeping the %d most recent",
            account_id, len(ordered), MAX_TIMELINE_LENGTH)
        ordered = ordered[-MAX_TIMELINE_LENGTH:]

    symbols = ''.join(encoder(action) for action in ordered)
    return DnaSequence(
        account_id or '', alphabet_id, symbols, get_label(label))


def base_histogram(sequence):
    return dict(Counter(sequence.symbols))
