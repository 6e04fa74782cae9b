"""Smoothing, discrete derivatives and peak detection on LCS curves."""
from dataclasses import dataclass
import logging
import math

import numpy
from scipy.signal import find_peaks

from dnasplit.exceptions import InvalidConfigurationError
from dnasplit.exceptions import InvalidInputError

log = logging.getLogger(__name__)

DEFAULT_WINDOW = 5


@dataclass(frozen=True)
class DerivativeSeries:
    """``values[i]`` is ``LCS[ks[i]] - LCS[ks[i] - 1]``."""
    ks: tuple
    values: tuple

    @classmethod
    def from_mapping(cls, mapping):
        ks = tuple(sorted(mapping))
        return cls(ks, tuple(mapping[k] for k in ks))

    @property
    def log_magnitude(self):
        """log10 of each absolute value; None where the value is 0."""
        return tuple(
            math.log10(abs(value)) if value else None
            for value in self.values)

    def __getitem__(self, k):
        return self.values[self.ks.index(k)]

    def __len__(self):
        return len(self.values)

    def items(self):
        return zip(self.ks, self.values)


@dataclass(frozen=True)
class SplitCandidate:
    """A peak of the derivative at ``k`` (through ``until_k`` for a
    plateau). ``drop`` is the fall of the curve across the run of
    consecutive negative values holding the peak."""
    k: int
    magnitude: float
    rank: int
    until_k: int = None
    drop: float = None

    def __post_init__(self):
        if self.until_k is None:
            object.__setattr__(self, 'until_k', self.k)
        if self.drop is None:
            object.__setattr__(self, 'drop', self.magnitude)


def validate_window(window):
    if isinstance(window, bool) or not isinstance(window, int) \
            or window < 1 or window % 2 == 0:
        raise InvalidConfigurationError(
            "Smoothing window must be an odd positive integer, "
            "got {0!r}".format(window))


def smooth(curve, window=DEFAULT_WINDOW):
    """Centered moving average of the curve lengths.

    Near the ends the window shrinks symmetrically; means are rounded
    half up. Witnesses and member sets are carried over unchanged.
    """
    validate_window(window)
    lengths = curve.lengths
    size = len(lengths)
    half = window // 2

    smoothed = []
    for i in range(size):
        h = min(half, i, size - 1 - i)
        total = sum(lengths[i - h:i + h + 1])
        count = 2 * h + 1
        smoothed.append((2 * total + count) // (2 * count))
    return curve.with_lengths(smoothed)


def derivative(curve):
    if curve.size < 3:
        raise InvalidInputError(
            "A derivative needs at least 3 accounts, got {0}".format(
                curve.size))
    lengths = curve.lengths
    ks = tuple(curve.ks[1:])
    values = tuple(
        current - previous
        for previous, current in zip(lengths, lengths[1:]))
    return DerivativeSeries(ks, values)


def default_min_prominence(series):
    """``max(1, 2 * median |LCS'|)`` over the nonzero entries."""
    magnitudes = [abs(value) for value in series.values if value]
    if not magnitudes:
        return 1
    return max(1, 2 * float(numpy.median(magnitudes)))


def _descent(values, first, last):
    while first > 0 and values[first - 1] < 0:
        first -= 1
    while last < len(values) - 1 and values[last + 1] < 0:
        last += 1
    return -float(sum(values[first:last + 1]))


def detect_peaks(series, min_prominence=1):
    """Finds the local minima of a derivative series.

    A run of equal values whose outer neighbours are both greater counts
    as one peak at its first index; the series ends compare against
    their single neighbour.

    :returns: :class:`SplitCandidate` list, largest magnitude first.
    """
    if not len(series):
        return []

    magnitudes = numpy.array(
        [-1.0] + [-float(value) for value in series.values] + [-1.0])
    peaks, properties = find_peaks(
        magnitudes, height=min_prominence, plateau_size=1)

    found = []
    for left, right in zip(properties['left_edges'],
                           properties['right_edges']):
        magnitude = float(magnitudes[left])
        if magnitude <= 0:
            continue
        found.append((
            magnitude, series.ks[left - 1], series.ks[right - 1],
            _descent(series.values, left - 1, right - 1)))
    found.sort(key=lambda peak: (-peak[0], peak[1]))

    candidates = [
        SplitCandidate(k, magnitude, rank, until_k, drop)
        for rank, (magnitude, k, until_k, drop)
        in enumerate(found, start=1)]
    log.debug("Found %d peaks above %s", len(candidates), min_prominence)
    return candidates
