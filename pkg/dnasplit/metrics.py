"""Confusion matrices and evaluation metrics; spambot is the positive
class."""
from dataclasses import asdict
from dataclasses import dataclass
import math

from dnasplit.dna import Label
from dnasplit.dna import get_label
from dnasplit.exceptions import InvalidInputError


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    tn: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def total(self):
        return self.tp + self.tn + self.fp + self.fn

    @classmethod
    def from_partition(cls, spambots, truth):
        """Counts a predicted spambot set against truth labels; every
        other account in ``truth`` is predicted genuine."""
        predicted = {
            account_id: Label.SPAMBOT if account_id in spambots
            else Label.GENUINE
            for account_id in truth}
        return confusion_matrix(predicted, truth)

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class MetricsReport:
    precision: float
    recall: float
    specificity: float
    accuracy: float
    f_measure: float
    mcc: float

    def as_dict(self):
        return asdict(self)


def _ratio(numerator, denominator):
    if not denominator:
        return 0.0
    return numerator / denominator


def confusion_matrix(predicted, truth):
    """
    :param predicted: mapping of account id to predicted label.
    :param truth: mapping of account id to true label.
    """
    if set(predicted) != set(truth):
        missing = sorted(set(truth) - set(predicted))
        extra = sorted(set(predicted) - set(truth))
        raise InvalidInputError(
            "Prediction keys differ from truth keys "
            "(missing {0}, unexpected {1})".format(missing, extra))

    counts = dict(tp=0, tn=0, fp=0, fn=0)
    for account_id, actual in truth.items():
        actual = get_label(actual) == Label.SPAMBOT
        flagged = get_label(predicted[account_id]) == Label.SPAMBOT
        if flagged and actual:
            counts['tp'] += 1
        elif flagged:
            counts['fp'] += 1
        elif actual:
            counts['fn'] += 1
        else:
            counts['tn'] += 1
    return ConfusionMatrix(**counts)


def matthews(cm):
    denominator = math.sqrt(
        (cm.tp + cm.fp) * (cm.tp + cm.fn) * (cm.tn + cm.fp)
        * (cm.tn + cm.fn))
    return _ratio(cm.tp * cm.tn - cm.fp * cm.fn, denominator)


def compute_metrics(cm):
    if not cm.total:
        raise InvalidInputError("Cannot score an empty confusion matrix")

    precision = _ratio(cm.tp, cm.tp + cm.fp)
    recall = _ratio(cm.tp, cm.tp + cm.fn)
    return MetricsReport(
        precision=precision,
        recall=recall,
        specificity=_ratio(cm.tn, cm.tn + cm.fp),
        accuracy=_ratio(cm.tp + cm.tn, cm.total),
        f_measure=_ratio(2 * precision * recall, precision + recall),
        mcc=matthews(cm),
    )


def roc_point(cm):
    """Returns ``(false positive rate, true positive rate)``."""
    return _ratio(cm.fp, cm.fp + cm.tn), _ratio(cm.tp, cm.tp + cm.fn)
