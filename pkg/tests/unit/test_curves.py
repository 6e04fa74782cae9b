import math
import random

import pytest

from dnasplit.curves import DerivativeSeries
from dnasplit.curves import default_min_prominence
from dnasplit.curves import derivative
from dnasplit.curves import detect_peaks
from dnasplit.curves import smooth
from dnasplit.dna import AccountGroup
from dnasplit.dna import DnaSequence
from dnasplit.exceptions import InvalidConfigurationError
from dnasplit.exceptions import InvalidInputError
from dnasplit.lcs import CurvePoint
from dnasplit.lcs import LcsCurve
from dnasplit.lcs import group_curve


def make_curve(lengths):
    size = len(lengths) + 1
    account_ids = tuple('a{0}'.format(i) for i in range(size))
    return LcsCurve(account_ids, tuple(
        CurvePoint(k, length, 'N' * length, frozenset(account_ids[:k]))
        for k, length in enumerate(lengths, start=2)))


class TestSmooth(object):

    def test_window_one(self):
        curve = make_curve([9, 7, 7, 2])

        assert smooth(curve, 1) == curve

    @pytest.mark.parametrize('window', [1, 3, 5, 9])
    def test_constant(self, window):
        curve = make_curve([4] * 7)

        assert smooth(curve, window).lengths == [4] * 7

    def test_shrinking_window(self):
        curve = make_curve([9, 9, 3, 3])

        assert smooth(curve, 3).lengths == [9, 7, 5, 3]

    @pytest.mark.parametrize('lengths,window,expected', [
        ([5, 5, 4, 4, 4], 3, [5, 5, 4, 4, 4]),
        ([6, 5, 4, 3, 1], 5, [6, 5, 4, 3, 1]),
        ([8, 7, 7, 0, 0, 0], 3, [8, 7, 5, 2, 0, 0]),
    ])
    def test_rounding(self, lengths, window, expected):
        assert smooth(make_curve(lengths), window).lengths == expected

    def test_keeps_witnesses(self):
        curve = make_curve([9, 9, 3, 3])

        smoothed = smooth(curve, 3)

        assert [p.witness for p in smoothed] == [p.witness for p in curve]
        assert [p.members for p in smoothed] == [p.members for p in curve]

    @pytest.mark.parametrize('window', [0, 2, -3, 4])
    def test_invalid_window(self, window):
        with pytest.raises(InvalidConfigurationError):
            smooth(make_curve([3, 2]), window)


class TestDerivative(object):

    def test_values(self):
        series = derivative(make_curve([10, 10, 4, 4]))

        assert series.ks == (3, 4, 5)
        assert series.values == (0, -6, 0)

    def test_log_magnitude(self):
        series = derivative(make_curve([10, 10, 4, 4]))

        assert series.log_magnitude[0] is None
        assert series.log_magnitude[1] == pytest.approx(
            math.log10(6), abs=1e-9)
        assert series.log_magnitude[1] == pytest.approx(0.7782, abs=1e-4)

    def test_constant(self):
        series = derivative(make_curve([7] * 5))

        assert set(series.values) == {0}

    def test_too_small(self):
        with pytest.raises(InvalidInputError):
            derivative(make_curve([3]))

    def test_sum(self):
        lengths = [12, 12, 9, 9, 9, 2, 1, 1]

        series = derivative(make_curve(lengths))

        assert sum(series.values) == lengths[-1] - lengths[0]

    @pytest.mark.parametrize('seed', range(30))
    @pytest.mark.parametrize('window', [1, 3, 5, 7])
    def test_nonpositive_after_smoothing(self, seed, window):
        rng = random.Random(seed)
        group = AccountGroup([
            DnaSequence('a{0}'.format(i), 'type3', ''.join(
                rng.choice('ACT') for _ in range(rng.randint(5, 60))))
            for i in range(rng.randint(3, 20))])
        curve = group_curve(group)

        assert all(v <= 0 for v in derivative(curve).values)
        assert all(v <= 0 for v in derivative(smooth(curve, window)).values)


class TestDetectPeaks(object):

    def test_single_peak(self):
        series = DerivativeSeries.from_mapping(
            {3: 0, 4: -1, 5: -9, 6: -1, 7: 0})

        candidates = detect_peaks(series, 1)

        assert candidates[0].k == 5
        assert candidates[0].magnitude == 9
        assert candidates[0].rank == 1

    def test_all_zero(self):
        series = DerivativeSeries.from_mapping({3: 0, 4: 0, 5: 0})

        assert detect_peaks(series, 0) == []

    def test_tie_smaller_k_first(self):
        series = DerivativeSeries.from_mapping({3: -4, 4: 0, 5: -4})

        candidates = detect_peaks(series, 1)

        assert [c.k for c in candidates] == [3, 5]
        assert [c.rank for c in candidates] == [1, 2]

    def test_min_prominence(self):
        series = DerivativeSeries.from_mapping(
            {3: -2, 4: 0, 5: -7, 6: 0, 7: -1})

        candidates = detect_peaks(series, 3)

        assert [c.k for c in candidates] == [5]

    def test_plateau_is_one_peak(self):
        series = DerivativeSeries.from_mapping(
            {3: 0, 4: -5, 5: -5, 6: -5, 7: 0, 8: -1})

        candidates = detect_peaks(series, 1)

        assert [(c.k, c.until_k) for c in candidates] == [(4, 6), (8, 8)]

    def test_shoulder_is_not_a_peak(self):
        series = DerivativeSeries.from_mapping({3: -3, 4: -3, 5: -6})

        candidates = detect_peaks(series, 1)

        assert [c.k for c in candidates] == [5]

    def test_descent_drop(self):
        series = DerivativeSeries.from_mapping(
            {3: -6, 4: 0, 5: -1, 6: -4, 7: -2, 8: 0})

        candidates = detect_peaks(series, 1)

        assert [c.k for c in candidates] == [3, 6]
        assert [c.drop for c in candidates] == [6.0, 7.0]

    def test_magnitudes_nonincreasing(self):
        rng = random.Random(5)
        values = {k: -rng.randint(0, 9) for k in range(3, 60)}

        candidates = detect_peaks(DerivativeSeries.from_mapping(values), 1)

        magnitudes = [c.magnitude for c in candidates]
        assert magnitudes == sorted(magnitudes, reverse=True)
        assert all(m >= 1 for m in magnitudes)

    def test_empty_series(self):
        assert detect_peaks(DerivativeSeries((), ()), 1) == []


class TestDefaultMinProminence(object):

    def test_floor(self):
        series = DerivativeSeries.from_mapping({3: 0, 4: 0})

        assert default_min_prominence(series) == 1

    def test_twice_median(self):
        series = DerivativeSeries.from_mapping(
            {3: -1, 4: -2, 5: 0, 6: -3, 7: -40})

        assert default_min_prominence(series) == 5
