"""Exports: sequence files, CSV tables and YAML reports."""
import csv
import json

from yaml import safe_dump

from dnasplit.dna import Label
from dnasplit.metrics import compute_metrics
from dnasplit.metrics import confusion_matrix

CURVE_COLUMNS = (
    'k', 'lcs_length', 'smoothed_length', 'derivative',
    'log10_abs_derivative', 'member_count', 'witness',
)
PERMUTATION_COLUMNS = ('k', 'original', 'mean', 'std', 'lower', 'upper')
BENCHMARK_COLUMNS = (
    'alphabet', 'n_accounts', 'length', 'repeats', 'mean_seconds',
    'std_seconds', 'mean_peak_bytes', 'std_peak_bytes',
)
IMBALANCE_COLUMNS = (
    'ratio', 'n_bots', 'n_humans', 'runs', 'mean_mcc', 'std_mcc',
)


def _float(value):
    if value is None:
        return ''
    return '{0:.6f}'.format(value)


def _writer(stream, columns):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    return writer


def write_sequences(sequences, stream):
    for sequence in sequences:
        stream.write(json.dumps({
            'account_id': sequence.account_id,
            'alphabet': sequence.alphabet_id.value,
            'symbols': sequence.symbols,
            'label': sequence.label.value,
        }, sort_keys=True))
        stream.write('\n')


def write_curve_csv(curve, smoothed, series, stream):
    """One row per k; ``series`` is the derivative of ``smoothed`` and may
    be None for groups too small to differentiate."""
    derivatives = {}
    if series is not None:
        derivatives = dict(zip(series.ks, zip(
            series.values, series.log_magnitude)))

    writer = _writer(stream, CURVE_COLUMNS)
    for point, smoothed_point in zip(curve, smoothed):
        value, magnitude = derivatives.get(point.k, ('', None))
        writer.writerow([
            point.k, point.length, smoothed_point.length, value,
            _float(magnitude), len(point.members), point.witness,
        ])


def write_permutation_csv(stats, stream, sigmas=3):
    lower, upper = stats.bounds(sigmas)
    writer = _writer(stream, PERMUTATION_COLUMNS)
    for row in zip(stats.ks, stats.original, stats.means, stats.stds,
                   lower, upper):
        k, original = row[:2]
        writer.writerow([k, original] + [_float(v) for v in row[2:]])


def write_benchmark_csv(records, stream):
    writer = _writer(stream, BENCHMARK_COLUMNS)
    for record in records:
        writer.writerow([
            record.alphabet_id.value, record.n_accounts, record.length,
            record.repeats, _float(record.mean_seconds),
            _float(record.std_seconds), _float(record.mean_peak_bytes),
            _float(record.std_peak_bytes),
        ])


def write_imbalance_csv(records, stream):
    writer = _writer(stream, IMBALANCE_COLUMNS)
    for record in records:
        writer.writerow([
            record.ratio, record.n_bots, record.n_humans, len(record.mccs),
            _float(record.mean_mcc), _float(record.std_mcc),
        ])


def metrics_report(predicted, truth):
    cm = confusion_matrix(predicted, truth)
    return {
        'confusion_matrix': cm.as_dict(),
        'metrics': compute_metrics(cm).as_dict(),
    }


def detection_report(result, parameters, truth=None, version=None):
    """Builds the detection report mapping in its fixed key order.

    Confusion matrix and metrics are included only when ``truth`` labels
    every account as spambot or genuine.
    """
    report = {
        'tool': 'dnasplit',
        'version': version,
        'mode': result.mode.value,
        'k_star': result.k_star,
        'threshold_length': result.threshold_length,
        'parameters': dict(parameters),
        'spambots': sorted(result.spambots),
        'genuine': sorted(result.genuine),
    }
    if truth is not None:
        scored = {
            account_id: truth.get(account_id)
            for account_id in result.account_ids}
        if all(label in (Label.SPAMBOT, Label.GENUINE)
               for label in scored.values()):
            report.update(metrics_report(result.predictions(), scored))
    return report


def dump_report(report, stream):
    safe_dump(report, stream, sort_keys=False, default_flow_style=False)
