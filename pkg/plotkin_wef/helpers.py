__doc__ = """
Small helpers shared by the modules of plotkin_wef.
Most carry doctests; tests/test_helpers.py runs them.
"""

__all__ = [
    'restrict_keys',
    'is_quoted_str',
    'prefix_multiline_str',
    'dict_to_sorted_str',

    'parse_rational',
    'format_rational',
    'bits_from_str',
    'bits_to_str',
    'popcount_rows',

    'outer_weight_range',
    'overlap_range',
]

from fractions import Fraction
import re

import numpy as np


# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
# dict / str helpers (settings files, log messages)
# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
def restrict_keys(d: dict, domain) -> dict:
    """Remove from d all items whose key is not in domain; return d.
    >>> d = {'max_depth': 3, 'colour': 'red'}
    >>> dr = restrict_keys(d, {'max_depth', 'max_length'})
    >>> dr
    {'max_depth': 3}
    >>> d is dr
    True
    """
    for k in set(d):
        if k not in domain:
            del d[k]
    return d


def is_quoted_str(s):
    """
    >>> is_quoted_str('')
    False
    >>> is_quoted_str('"')
    False
    >>> is_quoted_str('poly')
    False
    >>> is_quoted_str('"poly\\'')
    False
    >>> is_quoted_str("'json'")
    True
    >>> any(map(is_quoted_str, [0, tuple(), list()]))
    False
    """
    QUOTES = {"'", '"'}
    return isinstance(s, str) and len(s) >= 2 and s[0] == s[-1] and s[0] in QUOTES


def prefix_multiline_str(prefix: str, multiline_str: str):
    """
    :param prefix: string with which to prefix each line of multiline_str
    :param multiline_str: a possibly multiline string
    :return: prefix + (multiline_str with each \\n replaced by \\n + prefix)
    >>> prefix_multiline_str("    ", None)     # expect no output
    >>> prefix_multiline_str("> ", "combine")
    '> combine'
    >>> print(prefix_multiline_str("> ", "w=0\\nw=1"))
    > w=0
    > w=1
    """
    if multiline_str is None:
        return None
    return prefix + multiline_str.replace('\n', '\n' + prefix)


def dict_to_sorted_str(d):
    """Return a str representation of dict d where keys are in ascending order.
    >>> print(dict_to_sorted_str({'w': 4, 'n': 3}))
    {'n': 3, 'w': 4}
    """
    lst = sorted(d.items(), key=lambda p: p[0])
    return '{' + ', '.join("%r: %r" % (k, v) for (k, v) in lst) + '}'


# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
# exact scalars
# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
_RATIONAL_RE = re.compile(r'^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$')


def parse_rational(text: str) -> Fraction:
    """Parse a nonnegative integer or 'p/q' into a canonical Fraction.
    Raises ValueError on anything else, including a zero denominator.
    >>> parse_rational('6/9')
    Fraction(2, 3)
    >>> parse_rational(' 14 ')
    Fraction(14, 1)
    >>> parse_rational('1.5')
    Traceback (most recent call last):
    ...
    ValueError: not an integer or p/q rational: '1.5'
    >>> parse_rational('3/0')
    Traceback (most recent call last):
    ...
    ValueError: zero denominator in '3/0'
    """
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError("not an integer or p/q rational: %r" % text)
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError("zero denominator in %r" % text)
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q) -> str:
    """Exact text form: integers as '7', others as 'p/q'.
    >>> format_rational(Fraction(6, 9))
    '2/3'
    >>> format_rational(Fraction(4))
    '4'
    >>> format_rational(3)
    '3'
    """
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
# bit rows
# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
def bits_from_str(s: str) -> list:
    """Bit-string -> list of 0/1 ints, leftmost character = coordinate 0.
    >>> bits_from_str('0110')
    [0, 1, 1, 0]
    >>> bits_from_str('01x')
    Traceback (most recent call last):
    ...
    ValueError: bit string may only contain '0' and '1': '01x'
    """
    if any(ch not in '01' for ch in s):
        raise ValueError("bit string may only contain '0' and '1': %r" % s)
    return [int(ch) for ch in s]


def bits_to_str(row) -> str:
    """
    >>> bits_to_str([1, 1, 0])
    '110'
    """
    return ''.join('1' if b else '0' for b in row)


# popcount of every byte value
_BYTE_POPCOUNT = np.array([bin(i).count('1') for i in range(256)], dtype=np.uint16)


def popcount_rows(packed) -> np.ndarray:
    """Hamming weight of each row of a 2-D uint8 array of packed bits
    (as produced by numpy.packbits(..., axis=1)).
    >>> rows = np.packbits(np.array([[1, 1, 0], [1, 1, 1], [0, 0, 0]], dtype=np.uint8), axis=1)
    >>> popcount_rows(rows).tolist()
    [2, 3, 0]
    """
    packed = np.asarray(packed, dtype=np.uint8)
    if packed.ndim != 2:
        raise ValueError("expecting a 2-D array of packed rows, got %d-D" % packed.ndim)
    if packed.shape[1] == 0:
        return np.zeros(packed.shape[0], dtype=np.int64)
    return _BYTE_POPCOUNT[packed].sum(axis=1, dtype=np.int64)


# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
# index sets of the combine sum
# - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - - -
def outer_weight_range(w: int, n: int) -> range:
    """Values of w1 (weight of the v half) that can carry total weight w.
    >>> list(outer_weight_range(4, 3))
    [1, 2, 3]
    >>> list(outer_weight_range(0, 3))
    [0]
    """
    return range(max(0, w - n), min(w, n) + 1)


def overlap_range(w: int, n: int, w1: int) -> range:
    """Values of the overlap count i for given w and w1.
    >>> list(overlap_range(4, 3, 2))
    [1, 2]
    >>> list(overlap_range(6, 3, 3))
    [3]
    >>> list(overlap_range(5, 3, 3))
    [2]
    """
    return range(max(0, w - n), min(w1, w - w1) + 1)
