"""Monte Carlo permutation trials, class-imbalance sweeps, scalability
benchmarks and the multi-alphabet detection run."""
from dataclasses import dataclass
import logging
import time
import tracemalloc

import numpy

from dnasplit.curves import DEFAULT_WINDOW
from dnasplit.detection import unsupervised_split
from dnasplit.dna import AccountGroup
from dnasplit.dna import AlphabetId
from dnasplit.dna import get_alphabet_id
from dnasplit.exceptions import InvalidConfigurationError
from dnasplit.lcs import group_curve
from dnasplit.metrics import ConfusionMatrix
from dnasplit.metrics import compute_metrics
from dnasplit.synthetic import DEFAULT_SEED
from dnasplit.synthetic import GeneratorConfig
from dnasplit.synthetic import permute_group
from dnasplit.synthetic import sample_bots
from dnasplit.synthetic import sample_humans
from dnasplit.synthetic import synthesize_timelines

log = logging.getLogger(__name__)

DEFAULT_LENGTH = 200
DEFAULT_TEMPLATE_LENGTH = 40
DEFAULT_NOISE_RATE = 0.0


@dataclass(frozen=True)
class PermutationStats:
    ks: tuple
    original: tuple
    means: tuple
    stds: tuple
    trials: int

    def bounds(self, sigmas=3):
        """Lower and upper ``mean -/+ sigmas * std`` ribbons."""
        means = numpy.array(self.means)
        stds = numpy.array(self.stds)
        return (tuple((means - sigmas * stds).tolist()),
                tuple((means + sigmas * stds).tolist()))


@dataclass(frozen=True)
class ImbalanceRecord:
    ratio: float
    n_bots: int
    n_humans: int
    mean_mcc: float
    std_mcc: float
    mccs: tuple


@dataclass(frozen=True)
class BenchmarkRecord:
    alphabet_id: AlphabetId
    n_accounts: int
    length: int
    repeats: int
    mean_seconds: float
    std_seconds: float
    mean_peak_bytes: float
    std_peak_bytes: float


def _child_seeds(seed, count):
    if not isinstance(seed, numpy.random.SeedSequence):
        seed = numpy.random.SeedSequence(seed)
    return [int(child.generate_state(1)[0]) for child in seed.spawn(count)]


def planted_sequences(n_bots, n_humans, seed=DEFAULT_SEED,
                      alphabet_id=AlphabetId.TYPE3, length=DEFAULT_LENGTH,
                      template_length=DEFAULT_TEMPLATE_LENGTH,
                      noise_rate=DEFAULT_NOISE_RATE, max_length=None):
    """Bots around one template followed by uniform humans; either side
    may be empty.

    Lengths are drawn from ``[length, max_length]`` (just ``length`` by
    default).
    """
    max_length = length if max_length is None else max_length
    bots_seed, humans_seed = _child_seeds(seed, 2)
    sequences = []
    if n_bots:
        sequences.extend(sample_bots(GeneratorConfig(
            alphabet_id, n_bots, length, max_length, template_length,
            noise_rate, bots_seed)))
    if n_humans:
        sequences.extend(sample_humans(GeneratorConfig(
            alphabet_id, n_humans, length, max_length, seed=humans_seed)))
    return sequences


def _validate_count(name, value):
    if value < 1:
        raise InvalidConfigurationError(
            "{0} must be at least 1, got {1}".format(name, value))


def permute_sequences(group, trials, seed=DEFAULT_SEED):
    """Recomputes the LCS curve of ``trials`` independently shuffled
    copies of the group.

    Trial ``i`` draws from the ``i``-th child of ``SeedSequence(seed)``.
    """
    _validate_count('trials', trials)

    original = group_curve(group)
    samples = []
    for i, child in enumerate(numpy.random.SeedSequence(seed).spawn(trials)):
        rng = numpy.random.default_rng(child)
        samples.append(group_curve(permute_group(group, rng)).lengths)
        log.debug("Permutation trial %d/%d done", i + 1, trials)

    samples = numpy.array(samples, dtype=float)
    return PermutationStats(
        ks=tuple(original.ks),
        original=tuple(original.lengths),
        means=tuple(samples.mean(axis=0).tolist()),
        stds=tuple(samples.std(axis=0).tolist()),
        trials=trials,
    )


def _score(result, labels):
    cm = ConfusionMatrix.from_partition(result.spambots, labels)
    return compute_metrics(cm)


def imbalance_experiment(ratios, total_accounts, runs, seed=DEFAULT_SEED,
                         window=DEFAULT_WINDOW, min_prominence=None,
                         **generator):
    """Unsupervised MCC of planted groups as the bot share grows.

    :param ratios: bot fractions of ``total_accounts``, each in (0, 1].
    :param generator: overrides for :func:`planted_sequences`.
    :returns: one :class:`ImbalanceRecord` per ratio, in input order.
    """
    _validate_count('runs', runs)
    counts = []
    for ratio in ratios:
        n_bots = int(round(ratio * total_accounts))
        if not 0 < ratio <= 1 or n_bots < 2:
            raise InvalidConfigurationError(
                "Ratio {0} of {1} accounts gives {2} bots, need at "
                "least 2".format(ratio, total_accounts, n_bots))
        counts.append(n_bots)

    records = []
    ratio_seeds = numpy.random.SeedSequence(seed).spawn(len(counts))
    for ratio, n_bots, ratio_seed in zip(ratios, counts, ratio_seeds):
        n_humans = total_accounts - n_bots
        mccs = []
        for run_seed in ratio_seed.spawn(runs):
            group = AccountGroup(planted_sequences(
                n_bots, n_humans, run_seed, **generator))
            result = unsupervised_split(
                group_curve(group), window, min_prominence)
            mccs.append(_score(result, group.labels()).mcc)
        log.info(
            "Ratio %s: mean MCC %.3f over %d runs",
            ratio, numpy.mean(mccs), runs)
        records.append(ImbalanceRecord(
            ratio, n_bots, n_humans, float(numpy.mean(mccs)),
            float(numpy.std(mccs)), tuple(mccs)))
    return records


def _run_pipeline(timelines, alphabet_id, window):
    group = AccountGroup.from_sequences(
        [timeline.encode(alphabet_id) for timeline in timelines])
    return unsupervised_split(group_curve(group), window)


def benchmark(account_counts, sequence_lengths, alphabet_ids=(
        AlphabetId.TYPE3,), repeats=1, seed=DEFAULT_SEED,
        window=DEFAULT_WINDOW):
    """Times the encode, index, curve and split pipeline.

    Each cell runs on half planted bots and half humans; peak memory is
    the tracemalloc high-water mark of one pipeline call.
    """
    _validate_count('repeats', repeats)
    cells = [(get_alphabet_id(alphabet_id), n_accounts, length)
             for alphabet_id in alphabet_ids
             for n_accounts in account_counts
             for length in sequence_lengths]
    for _, n_accounts, _ in cells:
        if n_accounts < 2:
            raise InvalidConfigurationError(
                "A benchmark cell needs at least 2 accounts")

    records = []
    for (alphabet_id, n_accounts, length), cell_seed in zip(
            cells, _child_seeds(seed, len(cells))):
        n_bots = n_accounts // 2
        timelines = synthesize_timelines(planted_sequences(
            n_bots, n_accounts - n_bots, cell_seed, alphabet_id, length,
            min(DEFAULT_TEMPLATE_LENGTH, length)))

        seconds = []
        peaks = []
        for _ in range(repeats):
            tracemalloc.start()
            started = time.perf_counter()
            _run_pipeline(timelines, alphabet_id, window)
            seconds.append(time.perf_counter() - started)
            peaks.append(tracemalloc.get_traced_memory()[1])
            tracemalloc.stop()
        log.info(
            "%s x%d accounts x%d symbols: %.3fs",
            alphabet_id.value, n_accounts, length, numpy.mean(seconds))
        records.append(BenchmarkRecord(
            alphabet_id, n_accounts, length, repeats,
            float(numpy.mean(seconds)), float(numpy.std(seconds)),
            float(numpy.mean(peaks)), float(numpy.std(peaks))))
    return records


def alphabet_comparison(n_bots, n_humans, alphabet_ids=tuple(AlphabetId),
                        seed=DEFAULT_SEED, window=DEFAULT_WINDOW,
                        min_prominence=None, **generator):
    """Unsupervised detection of the same planted setup under each
    alphabet.

    :returns: mapping of :class:`AlphabetId` to MetricsReport.
    """
    reports = {}
    for alphabet_id in alphabet_ids:
        alphabet_id = get_alphabet_id(alphabet_id)
        group = AccountGroup(planted_sequences(
            n_bots, n_humans, seed, alphabet_id, **generator))
        result = unsupervised_split(
            group_curve(group), window, min_prominence)
        reports[alphabet_id] = _score(result, group.labels())
    return reports
