__doc__ = """
Exact binomial coefficients and the Plotkin ensemble coefficient a(w1, i).

All values are Python ints or fractions.Fraction; nothing here touches
floating point.
"""
from fractions import Fraction
import threading

from .errors import DomainError


__all__ = ['BinomialTable', 'binomial', 'binomial_row', 'plotkin_coefficient',
           'hypergeometric_coefficient', 'check_coefficient_indices']


class BinomialTable():
    """Rows of Pascal's triangle, filled lazily and kept for the session.

    >>> t = BinomialTable(4)
    >>> t.max_n
    4
    >>> t.row(4)
    (1, 4, 6, 4, 1)
    >>> t(6, 3)            # grows on demand
    20
    >>> t(5, 7), t(5, -1)
    (0, 0)
    """
    def __init__(self, max_n=0):
        self._rows = [(1,)]
        self._lock = threading.Lock()
        self.ensure(max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def ensure(self, max_n: int):
        """Make sure rows 0..max_n are present."""
        if max_n <= self.max_n:
            return
        with self._lock:
            rows = self._rows
            for n in range(len(rows), max_n + 1):
                prev = rows[-1]
                rows.append((1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,))

    def row(self, n: int) -> tuple:
        """(C(n,0), ..., C(n,n))"""
        if n < 0:
            raise DomainError("binomial row index must be >= 0, got %d" % n)
        self.ensure(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 0:
            raise DomainError("binomial(n, k) needs n >= 0, got n=%d" % n)
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


_table = BinomialTable()


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 when k is outside 0..n.
    >>> binomial(3, 2), binomial(6, 3), binomial(5, 7)
    (3, 20, 0)
    """
    return _table(n, k)


def binomial_row(n: int) -> tuple:
    return _table.row(n)


def check_coefficient_indices(n, w, w1, i):
    """Raise DomainError unless (n, w, w1, i) lies in the index set of the
    combine sum: 0 <= w <= 2n, max(0, w-n) <= w1 <= min(w, n),
    max(0, w-n) <= i <= min(w1, w-w1)."""
    if n < 1:
        raise DomainError("code length n must be >= 1, got %d" % n)
    if not 0 <= w <= 2 * n:
        raise DomainError("weight w=%d out of range 0..%d" % (w, 2 * n))
    lo = max(0, w - n)
    if not lo <= w1 <= min(w, n):
        raise DomainError("w1=%d out of range %d..%d for n=%d, w=%d"
                          % (w1, lo, min(w, n), n, w))
    if not lo <= i <= min(w1, w - w1):
        raise DomainError("i=%d out of range %d..%d for n=%d, w=%d, w1=%d"
                          % (i, lo, min(w1, w - w1), n, w, w1))


def plotkin_coefficient(n: int, w: int, w1: int, i: int) -> Fraction:
    """The ensemble coefficient a(w1, i) of the combine sum:

        C(n, w-w1) C(w-w1, i) C(n-w+w1, w1-i)
        -------------------------------------
               C(n, w1) C(n, w-2i)

    >>> plotkin_coefficient(3, 4, 2, 1)
    Fraction(2, 3)
    >>> plotkin_coefficient(3, 3, 0, 0), plotkin_coefficient(3, 4, 2, 2)
    (Fraction(1, 1), Fraction(1, 1))
    >>> plotkin_coefficient(3, 5, 2, 2)
    Fraction(1, 3)
    >>> plotkin_coefficient(3, 7, 2, 2)
    Traceback (most recent call last):
    ...
    plotkin_wef.errors.DomainError: weight w=7 out of range 0..6
    """
    check_coefficient_indices(n, w, w1, i)
    num = binomial(n, w - w1) * binomial(w - w1, i) * binomial(n - w + w1, w1 - i)
    den = binomial(n, w1) * binomial(n, w - 2 * i)
    return Fraction(num, den)


def hypergeometric_coefficient(n: int, w: int, w1: int, i: int) -> Fraction:
    """a(w1, i) after cancelling factorials:

        C(w1, i) C(n-w1, w-w1-i) / C(n, w-2i)

    Equal to plotkin_coefficient on its whole domain. The combine fast
    path sums with this form.

    >>> hypergeometric_coefficient(3, 4, 2, 1)
    Fraction(2, 3)
    """
    check_coefficient_indices(n, w, w1, i)
    return Fraction(binomial(w1, i) * binomial(n - w1, w - w1 - i),
                    binomial(n, w - 2 * i))
