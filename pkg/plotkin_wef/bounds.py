__doc__ = """
Truncated union bound on the block error probability of a binary code
over the binary-input AWGN channel:

    P_B <= sum_{w=1}^{W} A_w Q( sqrt(2 w R Eb/N0) )

with Eb/N0 given in dB. This is the one place where floating point is
used; the A_w arrive exact and are converted term by term. A term whose
A_w is beyond float range, or whose Q underflows, is evaluated as
exp(log A_w + log Q) with Q's logarithm from scipy.special.log_ndtr.
"""
from collections import namedtuple
from fractions import Fraction
import math

from scipy.special import erfc, log_ndtr

from .enumerator import WeightEnumerator
from .errors import DomainError, WeightRangeError
from .plotkin import combine_single_weight
from .tracing import traced


__all__ = ['ChannelPoint', 'q_function', 'truncated_union_bound',
           'union_bound_from_components', 'bound_table']


class ChannelPoint(namedtuple('ChannelPoint', ('rate', 'ebn0_db'))):
    """Code rate k/n in (0, 1] and Eb/N0 in dB (finite).

    >>> round(ChannelPoint(0.5, 3.0).snr_linear, 6)
    1.995262
    >>> ChannelPoint(0, 3.0)
    Traceback (most recent call last):
    ...
    plotkin_wef.errors.DomainError: rate must be in (0, 1], got 0
    """
    __slots__ = ()

    def __new__(cls, rate, ebn0_db):
        if not (0 < rate <= 1):
            raise DomainError("rate must be in (0, 1], got %r" % (rate,))
        if not math.isfinite(ebn0_db):
            raise DomainError("Eb/N0 must be finite, got %r" % (ebn0_db,))
        return super().__new__(cls, float(rate), float(ebn0_db))

    @property
    def snr_linear(self) -> float:
        """Eb/N0 as a ratio."""
        return 10.0 ** (self.ebn0_db / 10.0)


def q_function(x) -> float:
    """Gaussian tail Q(x) = P(N(0,1) > x) = erfc(x / sqrt 2) / 2.
    >>> q_function(0.0)
    0.5
    """
    return float(0.5 * erfc(x / math.sqrt(2.0)))


def _log_term(coeff, x) -> float:
    coeff = Fraction(coeff)
    exponent = (math.log(coeff.numerator) - math.log(coeff.denominator)
                + float(log_ndtr(-x)))
    try:
        return math.exp(exponent)
    except OverflowError:
        return math.inf


def _term(coeff, w, ch: ChannelPoint) -> float:
    x = math.sqrt(2.0 * w * ch.rate * ch.snr_linear)
    q = q_function(x)
    try:
        a = float(coeff)
    except OverflowError:
        a = math.inf
    if q > 0.0 and a != math.inf:
        return a * q
    return _log_term(coeff, x)


def _check_truncation(W, n):
    if not 1 <= W <= n:
        raise WeightRangeError("truncation weight %d out of range 1..%d" % (W, n))


@traced()
def truncated_union_bound(A: WeightEnumerator, W: int, ch: ChannelPoint) -> float:
    """Sum of A_w Q(sqrt(2 w R Eb/N0)) over 1 <= w <= W.

    >>> from plotkin_wef.enumerator import parse_poly
    >>> A = parse_poly("1 + 14x^4 + x^8", 8)
    >>> truncated_union_bound(A, 8, ChannelPoint(0.5, 3.0)) >= truncated_union_bound(A, 4, ChannelPoint(0.5, 3.0))
    True
    """
    _check_truncation(W, A.length)
    return math.fsum(_term(A[w], w, ch) for w in range(1, W + 1) if A[w])


def union_bound_from_components(A0: WeightEnumerator, A1: WeightEnumerator,
                                W: int, ch: ChannelPoint) -> float:
    """truncated_union_bound of combine(A0, A1), fed only by
    combine_single_weight for w <= W."""
    _check_truncation(W, 2 * A0.length)
    terms = []
    for w in range(1, W + 1):
        A_w = combine_single_weight(A0, A1, w)
        if A_w:
            terms.append(_term(A_w, w, ch))
    return math.fsum(terms)


def bound_table(A: WeightEnumerator, W: int, ch: ChannelPoint, ebn0_db_list) -> list:
    """[(ebn0_db, bound), ...] at ch.rate for each Eb/N0 in ebn0_db_list."""
    return [(float(e), truncated_union_bound(A, W, ChannelPoint(ch.rate, e)))
            for e in ebn0_db_list]
