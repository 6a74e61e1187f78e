__doc__ = """
WeightEnumerator -- the exact weight distribution A_0..A_n of a length-n
code, or the ensemble average over a family of codes -- together with its
text, JSON and CSV forms.

Text form ("poly"): terms "c", "c x^j", "x^j", "x" joined by '+', with c an
integer or p/q, e.g. "1 + 2/3x^3 + x^5". format_poly writes terms in
ascending order of j and omits zero terms.

JSON form: {"n": 6, "coeffs": {"0": "1", "3": "4", "4": "3"}}; zero
coefficients are omitted, values are integers or "p/q" strings.
"""
from fractions import Fraction
import re

from .combinatorics import binomial_row
from .errors import DomainError, LengthMismatchError, ParseError, WeightRangeError
from .helpers import format_rational, parse_rational


__all__ = ['WeightEnumerator', 'parse_poly', 'format_poly',
           'total_mass', 'min_positive_weight']


class WeightEnumerator():
    """Immutable dense coefficient vector; coeffs[j] is the (average)
    number of codewords of weight j.

    >>> A = WeightEnumerator(6, [1, 0, 0, 4, 3, 0, 0])
    >>> A
    WeightEnumerator(6, '1 + 4x^3 + 3x^4')
    >>> A.total_mass(), A.min_positive_weight()
    (Fraction(8, 1), 3)
    >>> A[4], A[9]
    (Fraction(3, 1), Fraction(0, 1))
    """
    __slots__ = ('_length', '_coeffs')

    def __init__(self, length: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if length < 0:
            raise DomainError("length must be >= 0, got %d" % length)
        if len(coeffs) != length + 1:
            raise LengthMismatchError("a length-%d enumerator needs %d coefficients, got %d"
                                      % (length, length + 1, len(coeffs)))
        for j, c in enumerate(coeffs):
            if c < 0:
                raise DomainError("negative coefficient %s at weight %d" % (c, j))
        self._length = length
        self._coeffs = coeffs

    @classmethod
    def from_counts(cls, counts, length=None):
        """Coefficients A_0, A_1, ... given as far as they're nonzero;
        the rest, up to `length`, are 0.
        >>> WeightEnumerator.from_counts([1, 0, 3], length=3).coeffs
        (Fraction(1, 1), Fraction(0, 1), Fraction(3, 1), Fraction(0, 1))
        """
        counts = list(counts)
        if length is None:
            length = len(counts) - 1
        if len(counts) > length + 1:
            if any(counts[length + 1:]):
                raise LengthMismatchError("nonzero coefficient beyond length %d" % length)
            counts = counts[:length + 1]
        return cls(length, counts + [0] * (length + 1 - len(counts)))

    @classmethod
    def zero_code(cls, length: int):
        """The code {0}: enumerator 1."""
        return cls.from_counts([1], length)

    @classmethod
    def full_space(cls, length: int):
        """All of GF(2)^n: coefficients C(n, j).
        >>> print(WeightEnumerator.full_space(3))
        1 + 3x + 3x^2 + x^3
        """
        return cls(length, binomial_row(length))

    @property
    def length(self) -> int:
        return self._length

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, w):
        """Coefficient of x^w; 0 for any w outside 0..length."""
        if 0 <= w <= self._length:
            return self._coeffs[w]
        return Fraction(0)

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return self._length == other._length and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._length, self._coeffs))

    def __repr__(self):
        return "WeightEnumerator(%d, %r)" % (self._length, format_poly(self))

    def __str__(self):
        return format_poly(self)

    def total_mass(self) -> Fraction:
        return sum(self._coeffs, Fraction(0))

    def min_positive_weight(self):
        """Smallest w > 0 with A_w > 0, or None."""
        for w in range(1, self._length + 1):
            if self._coeffs[w]:
                return w
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def truncated(self, W: int) -> tuple:
        """(A_0, ..., A_min(W, n))"""
        if W < 0:
            raise WeightRangeError("truncation weight must be >= 0, got %d" % W)
        return self._coeffs[:W + 1]

    def as_floats(self) -> list:
        return [float(c) for c in self._coeffs]

    def to_json(self) -> dict:
        """
        >>> WeightEnumerator(3, [1, 0, 0, Fraction(2, 3)]).to_json()
        {'n': 3, 'coeffs': {'0': '1', '3': '2/3'}}
        """
        return {'n': self._length,
                'coeffs': {str(w): format_rational(c)
                           for w, c in enumerate(self._coeffs) if c}}

    @classmethod
    def from_json(cls, obj):
        """Inverse of to_json. Coefficients may be ints or strings.
        Raises ParseError on anything malformed."""
        if not isinstance(obj, dict) or 'n' not in obj or 'coeffs' not in obj:
            raise ParseError('enumerator JSON needs keys "n" and "coeffs"')
        n, raw = obj['n'], obj['coeffs']
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ParseError('"n" must be a nonnegative integer, got %r' % (n,))
        if not isinstance(raw, dict):
            raise ParseError('"coeffs" must be an object mapping weights to values')
        coeffs = [Fraction(0)] * (n + 1)
        for key, val in raw.items():
            try:
                w = int(key)
            except ValueError:
                raise ParseError("weight %r is not an integer" % (key,)) from None
            if not 0 <= w <= n:
                raise LengthMismatchError("weight %d exceeds length %d" % (w, n))
            if isinstance(val, int) and not isinstance(val, bool) and val >= 0:
                coeffs[w] = Fraction(val)
            elif isinstance(val, str):
                try:
                    coeffs[w] = parse_rational(val)
                except ValueError as e:
                    raise ParseError("weight %d: %s" % (w, e)) from None
            else:
                raise ParseError("weight %d: bad coefficient %r" % (w, val))
        return cls(n, coeffs)

    def to_csv(self) -> str:
        """'weight,coefficient' heading, then one row per nonzero coefficient.
        >>> print(WeightEnumerator(3, [1, 0, 3, 0]).to_csv(), end='')
        weight,coefficient
        0,1
        2,3
        """
        lines = ['weight,coefficient']
        lines.extend("%d,%s" % (w, format_rational(c))
                     for w, c in enumerate(self._coeffs) if c)
        return '\n'.join(lines) + '\n'


def total_mass(A: WeightEnumerator) -> Fraction:
    """Sum of the coefficients: |C|, or E|C| for an ensemble."""
    return A.total_mass()


def min_positive_weight(A: WeightEnumerator):
    return A.min_positive_weight()


#----------------------------------------------------------------------------
# text form
#----------------------------------------------------------------------------
_WS_RE = re.compile(r'\s*')
_COEFF_RE = re.compile(r'(\d+)(?:\s*/\s*(\d+))?')
_INT_RE = re.compile(r'\d+')


def parse_poly(text: str, length: int) -> WeightEnumerator:
    """Parse the text form into a length-`length` enumerator.
    Repeated powers add up.

    >>> parse_poly("1 + 3x^2", 3).coeffs
    (Fraction(1, 1), Fraction(0, 1), Fraction(3, 1), Fraction(0, 1))
    >>> print(parse_poly("2/3x^3 + 1", 3))
    1 + 2/3x^3
    >>> parse_poly("1 + x^4", 3)
    Traceback (most recent call last):
    ...
    plotkin_wef.errors.LengthMismatchError: exponent 4 exceeds length 3 (at position 4)
    >>> parse_poly("1 + + x", 3)
    Traceback (most recent call last):
    ...
    plotkin_wef.errors.ParseError: expecting a term (at position 4)
    """
    coeffs = [Fraction(0)] * (length + 1)
    pos = _WS_RE.match(text, 0).end()
    while True:
        term_start = pos
        coeff = Fraction(1)
        have_coeff = False
        m = _COEFF_RE.match(text, pos)
        if m:
            have_coeff = True
            if m.group(2) is not None and int(m.group(2)) == 0:
                raise ParseError("zero denominator", m.start(2))
            coeff = Fraction(int(m.group(1)), int(m.group(2) or 1))
            pos = _WS_RE.match(text, m.end()).end()
            if text.startswith('*', pos):
                pos = _WS_RE.match(text, pos + 1).end()

        exponent = 0
        if pos < len(text) and text[pos] in 'xX':
            exponent = 1
            pos = _WS_RE.match(text, pos + 1).end()
            if text.startswith('^', pos):
                pos = _WS_RE.match(text, pos + 1).end()
                m = _INT_RE.match(text, pos)
                if not m:
                    raise ParseError("expecting an exponent", pos)
                exponent = int(m.group())
                pos = _WS_RE.match(text, m.end()).end()
        elif not have_coeff:
            raise ParseError("expecting a term", pos)

        if exponent > length:
            # LengthMismatchError carries no position; report it in the message
            raise LengthMismatchError("exponent %d exceeds length %d (at position %d)"
                                      % (exponent, length, term_start))
        coeffs[exponent] += coeff

        if pos == len(text):
            break
        if text[pos] != '+':
            raise ParseError("expecting '+'", pos)
        pos = _WS_RE.match(text, pos + 1).end()

    return WeightEnumerator(length, coeffs)


def format_poly(A: WeightEnumerator) -> str:
    """
    >>> format_poly(WeightEnumerator(8, [1, 0, 0, 0, 14, 0, 0, 0, 1]))
    '1 + 14x^4 + x^8'
    >>> format_poly(WeightEnumerator.zero_code(3))
    '1'
    """
    terms = []
    for j, c in enumerate(A.coeffs):
        if not c:
            continue
        if j == 0:
            terms.append(format_rational(c))
            continue
        power = 'x' if j == 1 else 'x^%d' % j
        terms.append(power if c == 1 else format_rational(c) + power)
    return ' + '.join(terms) if terms else '0'
