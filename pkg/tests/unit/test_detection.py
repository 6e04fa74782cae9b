import pytest

from dnasplit.detection import DivisiveNode
from dnasplit.detection import SplitMode
from dnasplit.detection import SplitResult
from dnasplit.detection import divisive_cluster
from dnasplit.detection import majority_vote
from dnasplit.detection import stratified_split
from dnasplit.detection import supervised_classify
from dnasplit.detection import supervised_train
from dnasplit.detection import unsupervised_split
from dnasplit.dna import AccountGroup
from dnasplit.dna import DnaSequence
from dnasplit.dna import Label
from dnasplit.exceptions import InvalidConfigurationError
from dnasplit.exceptions import InvalidInputError
from dnasplit.lcs import CurvePoint
from dnasplit.lcs import LcsCurve
from dnasplit.lcs import group_curve
from dnasplit.metrics import ConfusionMatrix
from dnasplit.metrics import matthews

HUMANS = ['CATCTACT', 'TCCATTCA', 'ACTTCTCA', 'TTCACCTA', 'CACTCATC']


def toy_group(bot_symbols, n_bots, humans):
    sequences = [
        DnaSequence('bot{0}'.format(i), 'type3', bot_symbols,
                    Label.SPAMBOT)
        for i in range(n_bots)]
    sequences += [
        DnaSequence('human{0}'.format(i), 'type3', symbols, Label.GENUINE)
        for i, symbols in enumerate(humans)]
    return AccountGroup(sequences)


@pytest.fixture
def eight():
    return toy_group('AAAAAAAA', 4, HUMANS[:4])


@pytest.fixture
def ten():
    return toy_group('TTTTTTTTTT', 5, HUMANS)


def assert_partition(result, account_ids):
    assert result.spambots | result.genuine == frozenset(account_ids)
    assert not result.spambots & result.genuine


class TestUnsupervisedSplit(object):

    def test_identical_accounts_split_off(self, eight):
        curve = group_curve(eight)

        result = unsupervised_split(curve, window=1, min_prominence=1)

        assert result.mode == SplitMode.UNSUPERVISED
        assert result.k_star == 4
        assert result.threshold_length == 8
        assert result.spambots == frozenset(
            ['bot0', 'bot1', 'bot2', 'bot3'])
        assert_partition(result, eight.account_ids)

    def test_default_parameters(self, eight):
        result = unsupervised_split(group_curve(eight))

        assert result.spambots == frozenset(
            ['bot0', 'bot1', 'bot2', 'bot3'])

    def test_flat_curve(self):
        group = toy_group('ACTTA', 5, [])

        result = unsupervised_split(group_curve(group))

        assert result.mode == SplitMode.NONE
        assert result.spambots == frozenset()
        assert result.genuine == frozenset(group.account_ids)

    def test_too_small(self):
        group = toy_group('ACT', 1, ['TCA'])

        with pytest.raises(InvalidInputError):
            unsupervised_split(group_curve(group))

    def test_deterministic(self, eight):
        curve = group_curve(eight)

        assert unsupervised_split(curve, 3, 1) == \
            unsupervised_split(curve, 3, 1)

    def test_deepest_descent_wins(self):
        lengths = [30, 24, 24, 24, 24, 24, 20, 16, 12, 8, 8, 8]
        account_ids = tuple('a{0}'.format(i) for i in range(13))
        curve = LcsCurve(account_ids, tuple(
            CurvePoint(k, length, 'A' * length, frozenset(account_ids[:k]))
            for k, length in enumerate(lengths, start=2)))

        result = unsupervised_split(curve, window=1, min_prominence=1)

        assert result.k_star == 7
        assert result.threshold_length == 24
        assert result.spambots == frozenset(account_ids[:7])

    def test_spambots_are_members(self, ten):
        curve = group_curve(ten)

        result = unsupervised_split(curve, window=3, min_prominence=1)

        assert result.spambots == curve[result.k_star].members
        assert len(result.spambots) >= result.k_star


class TestSupervisedTrain(object):

    def test_separable(self, ten):
        curve = group_curve(ten)

        classifier = supervised_train(curve, ten.labels())

        assert classifier.training_mcc == 1.0
        assert classifier.threshold_length == 10
        assert classifier.k_best == 2
        assert len(classifier.roc) == ten.size - 1
        assert all(0 <= x <= 1 and 0 <= y <= 1 for x, y in classifier.roc)

    def test_reproduces_mcc(self, ten):
        classifier = supervised_train(group_curve(ten), ten.labels())

        assert matthews(classifier.confusion) == classifier.training_mcc

    def test_flipped_label(self, ten):
        labels = ten.labels()
        labels['bot0'] = Label.GENUINE

        classifier = supervised_train(group_curve(ten), labels)

        assert classifier.training_mcc < 1.0
        assert classifier.training_mcc == pytest.approx(20 / 600 ** 0.5)
        assert classifier.threshold_length == 10
        assert classifier.confusion == ConfusionMatrix(
            tp=4, tn=5, fp=1, fn=0)

    def test_single_class(self, ten):
        labels = dict.fromkeys(ten.account_ids, Label.GENUINE)

        with pytest.raises(InvalidInputError):
            supervised_train(group_curve(ten), labels)

    def test_missing_label(self, ten):
        labels = ten.labels()
        del labels['human3']

        with pytest.raises(InvalidInputError):
            supervised_train(group_curve(ten), labels)


class TestSupervisedClassify(object):

    def test_learned_threshold(self, ten):
        classifier = supervised_train(group_curve(ten), ten.labels())
        test = toy_group('TTTTTTTTTTTT', 3, HUMANS[:3])

        result = supervised_classify(group_curve(test), classifier)

        assert result.mode == SplitMode.SUPERVISED
        assert result.k_star == 3
        assert result.spambots == frozenset(['bot0', 'bot1', 'bot2'])
        assert_partition(result, test.account_ids)

    def test_threshold_above_curve(self, ten, eight):
        classifier = supervised_train(group_curve(ten), ten.labels())

        result = supervised_classify(group_curve(eight), classifier)

        assert result.mode == SplitMode.NONE
        assert result.genuine == frozenset(eight.account_ids)

    def test_zero_threshold(self, ten):
        classifier = supervised_train(group_curve(ten), ten.labels())
        classifier = classifier.__class__(
            0, classifier.training_mcc, classifier.roc, classifier.k_best,
            classifier.confusion)
        curve = group_curve(ten)

        result = supervised_classify(curve, classifier)

        assert result.k_star == ten.size
        assert result.spambots == curve[ten.size].members


class TestDivisiveCluster(object):

    def test_single_split(self, eight):
        tree = divisive_cluster(
            group_curve(eight), eight, max_depth=1, window=1,
            min_prominence=1)

        assert len(tree.internal_nodes()) == 1
        assert tree.split_k == 4
        assert [set(leaf.account_ids) for leaf in tree.leaves()] == [
            {'bot0', 'bot1', 'bot2', 'bot3'},
            {'human0', 'human1', 'human2', 'human3'},
        ]

    def test_leaves_partition(self, ten):
        tree = divisive_cluster(
            group_curve(ten), ten, max_depth=4, window=1, min_prominence=1)

        leaves = [leaf.account_ids for leaf in tree.leaves()]
        assert frozenset().union(*leaves) == frozenset(ten.account_ids)
        assert sum(map(len, leaves)) == ten.size
        assert all(leaf.split_k is None for leaf in tree.leaves())

    def test_small_group_is_leaf(self):
        group = toy_group('ACT', 1, ['TCA'])

        tree = divisive_cluster(group_curve(group), group)

        assert tree == DivisiveNode(frozenset(['bot0', 'human0']))

    def test_flat_group_is_leaf(self):
        group = toy_group('ACTTA', 6, [])

        tree = divisive_cluster(group_curve(group), group)

        assert tree.is_leaf

    def test_invalid_depth(self, eight):
        with pytest.raises(InvalidConfigurationError):
            divisive_cluster(group_curve(eight), eight, max_depth=0)


class TestStratifiedSplit(object):

    def test_per_class_halves(self, ten):
        train, test = stratified_split(ten.labels(), seed=3)

        labels = ten.labels()
        assert sorted(train + test) == sorted(ten.account_ids)
        assert not set(train) & set(test)
        assert [labels[a] for a in train].count(Label.SPAMBOT) in (2, 3)
        assert [labels[a] for a in train].count(Label.GENUINE) in (2, 3)

    def test_deterministic(self, ten):
        assert stratified_split(ten.labels(), seed=11) == \
            stratified_split(ten.labels(), seed=11)

    @pytest.mark.parametrize('fraction', [0, 1, 1.5])
    def test_invalid_fraction(self, ten, fraction):
        with pytest.raises(InvalidConfigurationError):
            stratified_split(ten.labels(), fraction)


class TestMajorityVote(object):

    def result(self, spambots, mode=SplitMode.UNSUPERVISED):
        accounts = frozenset('abcd')
        return SplitResult(
            2, 5, frozenset(spambots), accounts - frozenset(spambots), mode)

    def test_majority(self):
        vote = majority_vote([
            self.result('ab'), self.result('bc'), self.result('b')])

        assert vote.spambots == frozenset('b')
        assert vote.genuine == frozenset('acd')
        assert vote.mode == SplitMode.UNSUPERVISED

    def test_tie_is_genuine(self):
        vote = majority_vote([self.result('a'), self.result('b')])

        assert vote.spambots == frozenset()

    def test_different_accounts(self):
        other = SplitResult(
            2, 5, frozenset('x'), frozenset('y'), SplitMode.UNSUPERVISED)

        with pytest.raises(InvalidInputError):
            majority_vote([self.result('a'), other])

    def test_empty(self):
        with pytest.raises(InvalidInputError):
            majority_vote([])
