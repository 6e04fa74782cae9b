"""Splitting account groups into spambots and genuine accounts."""
from dataclasses import dataclass
from dataclasses import field
from enum import Enum
import logging

import numpy

from dnasplit.curves import DEFAULT_WINDOW
from dnasplit.curves import default_min_prominence
from dnasplit.curves import derivative
from dnasplit.curves import detect_peaks
from dnasplit.curves import smooth
from dnasplit.dna import Label
from dnasplit.dna import get_label
from dnasplit.exceptions import InvalidConfigurationError
from dnasplit.exceptions import InvalidInputError
from dnasplit.lcs import group_curve
from dnasplit.metrics import ConfusionMatrix
from dnasplit.metrics import matthews
from dnasplit.metrics import roc_point

log = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 3
DEFAULT_TRAIN_FRACTION = 0.5


class SplitMode(Enum):
    SUPERVISED = 'supervised'
    UNSUPERVISED = 'unsupervised'
    NONE = 'none'


@dataclass(frozen=True)
class SplitResult:
    k_star: int
    threshold_length: int
    spambots: frozenset
    genuine: frozenset
    mode: SplitMode

    @property
    def account_ids(self):
        return self.spambots | self.genuine

    def predictions(self):
        predicted = dict.fromkeys(self.genuine, Label.GENUINE)
        predicted.update(dict.fromkeys(self.spambots, Label.SPAMBOT))
        return predicted


@dataclass(frozen=True)
class TrainedClassifier:
    threshold_length: int
    training_mcc: float
    roc: tuple
    k_best: int
    confusion: ConfusionMatrix


@dataclass(frozen=True)
class DivisiveNode:
    account_ids: frozenset
    split_k: int = None
    children: tuple = field(default=())

    @property
    def is_leaf(self):
        return not self.children

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def leaves(self):
        return [node for node in self.walk() if node.is_leaf]

    def internal_nodes(self):
        return [node for node in self.walk() if not node.is_leaf]


def _partition(curve, k_star, mode):
    point = curve[k_star]
    spambots = frozenset(point.members)
    genuine = frozenset(curve.account_ids) - spambots
    return SplitResult(k_star, point.length, spambots, genuine, mode)


def _no_split(curve):
    return SplitResult(
        None, None, frozenset(), frozenset(curve.account_ids),
        SplitMode.NONE)


def _place_line(curve, candidate, window):
    """Most negative raw derivative around a smoothed peak; the line
    goes left of it."""
    raw = derivative(curve)
    low = max(raw.ks[0], candidate.k - window // 2)
    high = min(raw.ks[-1], candidate.until_k + window // 2)
    return min(range(low, high + 1), key=lambda k: (raw[k], k))


def _strongest(candidates):
    """Deepest descent first, then the sharper peak, then the smaller k."""
    return min(candidates, key=lambda c: (-c.drop, c.rank))


def unsupervised_split(curve, window=DEFAULT_WINDOW, min_prominence=None):
    """Splits a group at the deepest drop of its smoothed LCS curve.

    Peaks are ranked by the fall of the descent holding them, then by
    their own magnitude.

    :param min_prominence: smallest peak magnitude; derived from the
        series when None.
    """
    series = derivative(smooth(curve, window))
    if min_prominence is None:
        min_prominence = default_min_prominence(series)

    candidates = detect_peaks(series, min_prominence)
    if not candidates:
        log.info("No drop above %s, nothing to split", min_prominence)
        return _no_split(curve)

    k_star = _place_line(curve, _strongest(candidates), window) - 1
    result = _partition(curve, k_star, SplitMode.UNSUPERVISED)
    log.info(
        "Split at k=%d (LCS %d): %d spambots, %d genuine",
        k_star, result.threshold_length, len(result.spambots),
        len(result.genuine))
    return result


def _training_labels(curve, labels):
    truth = {}
    for account_id in curve.account_ids:
        if account_id not in labels:
            raise InvalidInputError(
                "Training account '{0}' has no label".format(account_id))
        label = get_label(labels[account_id])
        if label == Label.UNLABELED:
            raise InvalidInputError(
                "Training account '{0}' is unlabeled".format(account_id))
        truth[account_id] = label
    if len(set(truth.values())) < 2:
        raise InvalidInputError(
            "Training labels must contain both spambot and genuine")
    return truth


def supervised_train(train_curve, labels):
    """Picks the split of the training curve with the highest MCC.

    Every k in ``[2, M]`` is evaluated as a classifier flagging
    ``members[k]``; equal MCCs resolve to the smaller k.
    """
    truth = _training_labels(train_curve, labels)

    best = None
    roc = []
    for point in train_curve:
        cm = ConfusionMatrix.from_partition(point.members, truth)
        roc.append(roc_point(cm))
        mcc = matthews(cm)
        if best is None or mcc > best[0]:
            best = (mcc, point, cm)

    mcc, point, cm = best
    log.info(
        "Trained threshold %d at k=%d with MCC %.3f",
        point.length, point.k, mcc)
    return TrainedClassifier(
        threshold_length=point.length,
        training_mcc=mcc,
        roc=tuple(roc),
        k_best=point.k,
        confusion=cm,
    )


def supervised_classify(test_curve, classifier):
    """Flags ``members[k*]`` for the largest k* whose LCS reaches the
    learned threshold."""
    reaching = [
        point.k for point in test_curve
        if point.length >= classifier.threshold_length]
    if not reaching:
        log.info(
            "Threshold %d exceeds the test curve",
            classifier.threshold_length)
        return _no_split(test_curve)
    return _partition(test_curve, max(reaching), SplitMode.SUPERVISED)


def _divide(curve, group, depth, max_depth, window, min_prominence):
    account_ids = frozenset(group.account_ids)
    if depth >= max_depth or group.size < 3:
        return DivisiveNode(account_ids)

    result = unsupervised_split(curve, window, min_prominence)
    if result.mode == SplitMode.NONE \
            or not result.spambots or not result.genuine:
        return DivisiveNode(account_ids)

    children = []
    for side in (result.spambots, result.genuine):
        if len(side) < 3:
            children.append(DivisiveNode(frozenset(side)))
            continue
        subgroup = group.subgroup(side)
        children.append(_divide(
            group_curve(subgroup), subgroup, depth + 1, max_depth,
            window, min_prominence))
    log.debug(
        "Depth %d split of %d accounts at k=%d",
        depth, group.size, result.k_star)
    return DivisiveNode(account_ids, result.k_star, tuple(children))


def divisive_cluster(curve, group, max_depth=DEFAULT_MAX_DEPTH,
                     window=DEFAULT_WINDOW, min_prominence=None):
    """Top-down dendrogram: each node is split at its top-ranked drop
    and the curve is recomputed for both sides."""
    if max_depth < 1:
        raise InvalidConfigurationError(
            "max_depth must be positive, got {0}".format(max_depth))
    return _divide(curve, group, 0, max_depth, window, min_prominence)


def stratified_split(labels, train_fraction=DEFAULT_TRAIN_FRACTION,
                     seed=0):
    """Seeded per-class split of labelled accounts.

    :returns: ``(train_ids, test_ids)`` as sorted lists.
    """
    if not 0 < train_fraction < 1:
        raise InvalidConfigurationError(
            "train_fraction must lie in (0, 1), got {0}".format(
                train_fraction))

    rng = numpy.random.default_rng(seed)
    train, test = [], []
    for label in (Label.SPAMBOT, Label.GENUINE):
        members = sorted(
            account_id for account_id, value in labels.items()
            if get_label(value) == label)
        shuffled = [members[i] for i in rng.permutation(len(members))]
        cut = int(round(len(shuffled) * train_fraction))
        train.extend(shuffled[:cut])
        test.extend(shuffled[cut:])
    return sorted(train), sorted(test)


def majority_vote(results):
    """Combines splits of the same accounts, e.g. one per alphabet; an
    account is a spambot when more than half of the splits flag it."""
    if not results:
        raise InvalidInputError("Nothing to vote on")
    accounts = results[0].account_ids
    for result in results[1:]:
        if result.account_ids != accounts:
            raise InvalidInputError("Votes cover different accounts")

    spambots = frozenset(
        account_id for account_id in accounts
        if 2 * sum(account_id in r.spambots for r in results) > len(results))
    modes = {result.mode for result in results}
    mode = modes.pop() if len(modes) == 1 else SplitMode.UNSUPERVISED
    first = results[0]
    return SplitResult(
        first.k_star, first.threshold_length, spambots,
        accounts - spambots, mode)
