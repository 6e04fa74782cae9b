"""Longest common substrings of account groups.

The generalized suffix structure is a suffix array with LCP table over
the group's sequences joined by per-document separators. One bottom-up
pass over the LCP intervals counts, for every interval, the number of
distinct documents below it (color set size, with previous-occurrence
corrections) which answers the k-common substring problem for all k.
"""
from bisect import bisect_right
from collections import Counter
from collections import defaultdict
from dataclasses import dataclass
import logging

from dnasplit.exceptions import InvalidInputError
from dnasplit.suffixes import lcp_array
from dnasplit.suffixes import suffix_array

log = logging.getLogger(__name__)

DEFAULT_ORACLE_BOUND = 200


@dataclass(frozen=True)
class CorpusIndex:
    """Suffix array and LCP table over ``doc_0 $_0 doc_1 $_1 ...``.

    Separator ``$_d`` has code ``len(symbols) + d``; base codes follow
    the sorted order of ``symbols`` so suffix order is string order.
    """
    account_ids: tuple
    symbols: str
    text: list
    starts: tuple
    documents: list
    order: list
    lcp: list

    @property
    def size(self):
        return len(self.account_ids)

    def is_separator(self, position):
        return self.text[position] >= len(self.symbols)

    def decode(self, position, length):
        return ''.join(
            self.symbols[code]
            for code in self.text[position:position + length])


@dataclass(frozen=True)
class CurvePoint:
    k: int
    length: int
    witness: str
    members: frozenset


@dataclass(frozen=True)
class LcsCurve:
    account_ids: tuple
    points: tuple

    @property
    def size(self):
        return len(self.account_ids)

    @property
    def ks(self):
        return [point.k for point in self.points]

    @property
    def lengths(self):
        return [point.length for point in self.points]

    def __getitem__(self, k):
        if not 2 <= k <= self.size:
            raise KeyError(k)
        return self.points[k - 2]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def with_lengths(self, lengths):
        return LcsCurve(self.account_ids, tuple(
            CurvePoint(point.k, length, point.witness, point.members)
            for point, length in zip(self.points, lengths)))


def _index_texts(account_ids, texts):
    symbols = ''.join(sorted(set(''.join(texts))))
    codes = {symbol: code for code, symbol in enumerate(symbols)}

    text = []
    documents = []
    starts = []
    for doc, sequence in enumerate(texts):
        starts.append(len(text))
        text.extend(codes[symbol] for symbol in sequence)
        text.append(len(symbols) + doc)
        documents.extend([doc] * (len(sequence) + 1))

    alphabet_size = len(symbols) + len(texts)
    order = suffix_array(text, alphabet_size)
    lcp = lcp_array(text, order)
    log.debug(
        "Indexed %d documents, %d positions", len(texts), len(text))
    return CorpusIndex(
        tuple(account_ids), symbols, text, tuple(starts), documents,
        order, lcp)


def build_index(group):
    """Builds the generalized suffix index of an account group.

    :param group: :class:`dnasplit.dna.AccountGroup` of non-empty
        sequences.
    """
    if len(group.sequences) < 2:
        raise InvalidInputError(
            "An index needs at least 2 sequences, got {0}".format(
                len(group.sequences)))
    for sequence in group.sequences:
        if not sequence.symbols:
            raise InvalidInputError(
                "Account '{0}' has an empty sequence".format(
                    sequence.account_id))
    return _index_texts(
        group.account_ids, [s.symbols for s in group.sequences])


def _lcp_intervals(index):
    """Yields ``(lcp, left, right, documents)`` for every LCP interval
    with lcp > 0, children before parents."""
    order, lcp, documents = index.order, index.lcp, index.documents
    n = len(order)

    # open intervals, outermost first; lefts increase along the stack
    depths = [0]
    lefts = [0]
    duplicates = [0]
    last_seen = [-1] * index.size

    for i in range(n + 1):
        height = lcp[i] if i < n else 0
        left = i - 1
        carried = 0
        while height < depths[-1]:
            depth = depths.pop()
            left = lefts.pop()
            dup = duplicates.pop()
            right = i - 1
            yield depth, left, right, right - left + 1 - dup
            if depths[-1] >= height:
                duplicates[-1] += dup
            else:
                carried = dup
        if height > depths[-1]:
            depths.append(height)
            lefts.append(left)
            duplicates.append(carried)

        if i == n:
            break
        doc = documents[order[i]]
        previous = last_seen[doc]
        if previous >= 0:
            # deepest open interval holding both occurrences
            duplicates[bisect_right(lefts, previous) - 1] += 1
        last_seen[doc] = i


def _member_ids(index, left, right):
    documents = {index.documents[index.order[r]]
                 for r in range(left, right + 1)}
    return frozenset(index.account_ids[doc] for doc in documents)


def common_substring_curve(index):
    """Solves the k-common substring problem for every k in [2, M].

    :param index: :class:`CorpusIndex` from :func:`build_index`.
    :returns: :class:`LcsCurve` with exact lengths, the lexicographically
        smallest witness per k and the accounts containing it.
    """
    size = index.size
    best = [0] * (size + 1)
    by_depth = defaultdict(list)
    for depth, left, right, colors in _lcp_intervals(index):
        if colors < 2:
            continue
        colors = min(colors, size)
        if depth > best[colors]:
            best[colors] = depth
        by_depth[depth].append((colors, left, right))

    lengths = [0] * (size + 1)
    running = 0
    for k in range(size, 1, -1):
        running = max(running, best[k])
        lengths[k] = running

    ks_by_length = defaultdict(list)
    for k in range(2, size + 1):
        ks_by_length[lengths[k]].append(k)

    chosen = {}
    for length, ks in ks_by_length.items():
        if length == 0:
            continue
        candidates = sorted(by_depth[length], reverse=True)
        position = 0
        pick = None
        for k in sorted(ks, reverse=True):
            while position < len(candidates) \
                    and candidates[position][0] >= k:
                _, left, right = candidates[position]
                if pick is None or left < pick[0]:
                    pick = (left, right)
                position += 1
            chosen[k] = pick

    members_cache = {}
    points = []
    for k in range(2, size + 1):
        length = lengths[k]
        if length == 0:
            points.append(CurvePoint(k, 0, '', frozenset()))
            continue
        left, right = chosen[k]
        if (left, right) not in members_cache:
            members_cache[left, right] = _member_ids(index, left, right)
        witness = index.decode(index.order[left], length)
        points.append(
            CurvePoint(k, length, witness, members_cache[left, right]))
    return LcsCurve(index.account_ids, tuple(points))


def group_curve(group):
    return common_substring_curve(build_index(group))


def lcs_pair(s1, s2):
    """Longest common substring of two strings, ties broken by the
    lexicographically smallest."""
    if not s1 or not s2:
        return ''
    index = _index_texts(('s1', 's2'), [s1, s2])
    return common_substring_curve(index)[2].witness


def brute_force_curve(group, bound=DEFAULT_ORACLE_BOUND):
    """Exhaustive k-common substring oracle for desk-sized groups."""
    total = sum(len(sequence) for sequence in group.sequences)
    if total > bound:
        raise InvalidInputError(
            "Oracle bound exceeded: {0} symbols > {1}".format(total, bound))

    occurrences = Counter()
    containing = defaultdict(set)
    for sequence in group.sequences:
        symbols = sequence.symbols
        substrings = {symbols[i:j]
                      for i in range(len(symbols))
                      for j in range(i + 1, len(symbols) + 1)}
        for substring in substrings:
            occurrences[substring] += 1
            containing[substring].add(sequence.account_id)

    points = []
    for k in range(2, group.size + 1):
        common = [s for s, count in occurrences.items() if count >= k]
        if not common:
            points.append(CurvePoint(k, 0, '', frozenset()))
            continue
        length = max(len(s) for s in common)
        witness = min(s for s in common if len(s) == length)
        points.append(CurvePoint(
            k, length, witness, frozenset(containing[witness])))
    return LcsCurve(group.account_ids, tuple(points))
