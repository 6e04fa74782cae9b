"""Suffix array by induced sorting (SA-IS) and Kasai's LCP array.

Texts are lists of integer codes in ``range(alphabet_size)``. Induced
sorting works on the text followed by a virtual terminator smaller than
every code; slot 0 of the internal arrays holds that terminator's suffix.
"""

S_TYPE = 1
L_TYPE = 0


def classify_suffixes(text):
    n = len(text)
    types = bytearray(n + 1)
    types[n] = S_TYPE
    if not n:
        return types

    types[n - 1] = L_TYPE
    for i in range(n - 2, -1, -1):
        if text[i] < text[i + 1]:
            types[i] = S_TYPE
        elif text[i] == text[i + 1] and types[i + 1] == S_TYPE:
            types[i] = S_TYPE
    return types


def is_lms(offset, types):
    return offset > 0 and types[offset] == S_TYPE \
        and types[offset - 1] == L_TYPE


def lms_blocks_equal(text, types, a, b):
    n = len(text)
    if a == n or b == n:
        return False

    i = 0
    while True:
        a_lms = is_lms(a + i, types)
        b_lms = is_lms(b + i, types)
        if i > 0 and a_lms and b_lms:
            return True
        if a_lms != b_lms or text[a + i] != text[b + i]:
            return False
        i += 1


def bucket_sizes(text, alphabet_size):
    sizes = [0] * alphabet_size
    for code in text:
        sizes[code] += 1
    return sizes


def bucket_heads(sizes):
    heads = []
    offset = 1
    for size in sizes:
        heads.append(offset)
        offset += size
    return heads


def bucket_tails(sizes):
    tails = []
    offset = 0
    for size in sizes:
        offset += size
        tails.append(offset)
    return tails


def _place_lms_guess(text, sizes, types):
    order = [-1] * (len(text) + 1)
    tails = bucket_tails(sizes)
    for i in range(len(text)):
        if is_lms(i, types):
            code = text[i]
            order[tails[code]] = i
            tails[code] -= 1
    order[0] = len(text)
    return order


def _induce_l(text, order, sizes, types):
    heads = bucket_heads(sizes)
    for i in range(len(order)):
        j = order[i] - 1
        if j < 0 or types[j] != L_TYPE:
            continue
        code = text[j]
        order[heads[code]] = j
        heads[code] += 1


def _induce_s(text, order, sizes, types):
    tails = bucket_tails(sizes)
    for i in range(len(order) - 1, -1, -1):
        j = order[i] - 1
        if j < 0 or types[j] != S_TYPE:
            continue
        code = text[j]
        order[tails[code]] = j
        tails[code] -= 1


def _summarise(text, order, types):
    names = [-1] * (len(text) + 1)
    name = 0
    names[order[0]] = name
    previous = order[0]
    for offset in order[1:]:
        if not is_lms(offset, types):
            continue
        if not lms_blocks_equal(text, types, previous, offset):
            name += 1
        previous = offset
        names[offset] = name

    offsets = []
    summary = []
    for offset, name_ in enumerate(names):
        if name_ != -1:
            offsets.append(offset)
            summary.append(name_)
    return summary, name + 1, offsets


def _summary_order(summary, summary_size):
    if summary_size == len(summary):
        order = [-1] * (len(summary) + 1)
        order[0] = len(summary)
        for offset, name in enumerate(summary):
            order[name + 1] = offset
        return order
    return _induced_sort(summary, summary_size)


def _place_lms_exact(text, sizes, summary_order, summary_offsets):
    order = [-1] * (len(text) + 1)
    tails = bucket_tails(sizes)
    for i in range(len(summary_order) - 1, 1, -1):
        offset = summary_offsets[summary_order[i]]
        code = text[offset]
        order[tails[code]] = offset
        tails[code] -= 1
    order[0] = len(text)
    return order


def _induced_sort(text, alphabet_size):
    types = classify_suffixes(text)
    sizes = bucket_sizes(text, alphabet_size)

    order = _place_lms_guess(text, sizes, types)
    _induce_l(text, order, sizes, types)
    _induce_s(text, order, sizes, types)

    summary, summary_size, summary_offsets = _summarise(text, order, types)
    summary_order = _summary_order(summary, summary_size)

    order = _place_lms_exact(text, sizes, summary_order, summary_offsets)
    _induce_l(text, order, sizes, types)
    _induce_s(text, order, sizes, types)
    return order


def suffix_array(text, alphabet_size):
    """Returns the start offsets of the suffixes of ``text`` in
    lexicographic order.

    :param text: sequence of ints in ``range(alphabet_size)``.
    """
    if not text:
        return []
    return _induced_sort(text, alphabet_size)[1:]


def lcp_array(text, order):
    """``lcp[r]`` is the longest common prefix of the suffixes ranked
    ``r - 1`` and ``r``; ``lcp[0]`` is 0."""
    n = len(text)
    rank = [0] * n
    for r, offset in enumerate(order):
        rank[offset] = r

    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = order[r - 1]
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp
