__doc__ = """
The combine of two component enumerators under the Plotkin construction
{(u + vP, v) : u in C0, v in C1}, P a uniformly random permutation, and the
minimum-distance rule d = min(d0, 2 d1).

For 0 <= w <= 2n the ensemble-average number of weight-w codewords is

    A_w = sum over w1, i of  a(w1, i) * A1[w1] * A0[w - 2i]

with w1 in max(0, w-n)..min(w, n), i in max(0, w-n)..min(w1, w-w1), and
a(w1, i) as in combinatorics.plotkin_coefficient.

Arithmetic: a(w1, i) * A0[j] = C(w1, i) C(n-w1, w-w1-i) * (A0[j] / C(n, j)),
j = w - 2i. The ratios A0[j] / C(n, j) and the coefficients of A1 are
brought to common denominators once, so the sums run over Python ints and
a single Fraction is built per weight. The lcm of C(n, 0..n) divides
lcm(1..n+1), so the scaled integers stay small.

A_w depends only on A0[j], A1[w1] with j, w1 <= w; combine_prefix uses that
to evaluate weights 0..W from spectrum prefixes.
"""
from fractions import Fraction
import math

from .combinatorics import binomial, binomial_row, plotkin_coefficient
from .enumerator import WeightEnumerator
from .errors import DomainError, LengthMismatchError, WeightRangeError
from .helpers import outer_weight_range, overlap_range
from .tracing import traced


__all__ = ['combine', 'combine_single_weight', 'combine_prefix',
           'combine_reference', 'min_distance_combine']


def _check_lengths(A0, A1):
    if A0.length != A1.length:
        raise LengthMismatchError("component lengths differ: %d and %d"
                                  % (A0.length, A1.length))
    if A0.length < 1:
        raise DomainError("component length must be >= 1, got %d" % A0.length)
    return A0.length


def _scaled_u_side(coeffs, n, upto):
    """Integers b[j] and L with b[j] / L == coeffs[j] / C(n, j), j <= upto."""
    ratios = [Fraction(coeffs[j]) / binomial(n, j) for j in range(upto + 1)]
    L = math.lcm(*(r.denominator for r in ratios)) if ratios else 1
    return [r.numerator * (L // r.denominator) for r in ratios], L


def _scaled_v_side(coeffs, upto):
    """Integers a[w1] and D with a[w1] / D == coeffs[w1], w1 <= upto."""
    vals = [Fraction(coeffs[w1]) for w1 in range(upto + 1)]
    D = math.lcm(*(v.denominator for v in vals)) if vals else 1
    return [v.numerator * (D // v.denominator) for v in vals], D


def _combine_upto(A0_coeffs, A1_coeffs, n, W) -> tuple:
    """A_0..A_W of the combined ensemble. Only A0_coeffs[:W+1] and
    A1_coeffs[:W+1] (capped at n) are read."""
    top = min(W, n)
    b, L = _scaled_u_side(A0_coeffs, n, top)
    a1, D = _scaled_v_side(A1_coeffs, top)
    nz_u = [j for j in range(top + 1) if b[j]]

    S = [0] * (W + 1)
    for w1 in range(top + 1):
        if not a1[w1]:
            continue
        row_w1 = binomial_row(w1)
        row_rest = binomial_row(n - w1)
        for j in nz_u:
            t = a1[w1] * b[j]
            # i must satisfy 0 <= i <= w1 and 0 <= j+i-w1 <= n-w1
            i_hi = min(w1, n - j, (W - j) // 2)
            for i in range(max(0, w1 - j), i_hi + 1):
                S[j + 2 * i] += t * row_w1[i] * row_rest[j + i - w1]

    den = L * D
    return tuple(Fraction(s, den) for s in S)


@traced()
def combine(A0: WeightEnumerator, A1: WeightEnumerator) -> WeightEnumerator:
    """Ensemble weight enumerator of the length-2n code built from
    u in C0 (spectrum A0) and v in C1 (spectrum A1).

    >>> from plotkin_wef.enumerator import parse_poly
    >>> print(combine(parse_poly("1 + x^3", 3), parse_poly("1 + 3x^2", 3)))
    1 + 4x^3 + 3x^4
    >>> print(combine(parse_poly("1 + x", 3), parse_poly("1 + x^2", 3)))
    1 + x + 2/3x^3 + x^4 + 1/3x^5
    """
    n = _check_lengths(A0, A1)
    return WeightEnumerator(2 * n, _combine_upto(A0.coeffs, A1.coeffs, n, 2 * n))


@traced()
def combine_single_weight(A0: WeightEnumerator, A1: WeightEnumerator, w: int) -> Fraction:
    """Coefficient w of combine(A0, A1), summing over w1 then i without
    touching any other weight.

    >>> from plotkin_wef.enumerator import parse_poly
    >>> A0, A1 = parse_poly("1 + x^3", 3), parse_poly("1 + 3x^2", 3)
    >>> [combine_single_weight(A0, A1, w) for w in (0, 4, 6)]
    [Fraction(1, 1), Fraction(3, 1), Fraction(0, 1)]
    """
    n = _check_lengths(A0, A1)
    if not 0 <= w <= 2 * n:
        raise WeightRangeError("target weight %d out of range 0..%d" % (w, 2 * n))
    top = min(w, n)
    b, L = _scaled_u_side(A0.coeffs, n, top)
    a1, D = _scaled_v_side(A1.coeffs, top)

    s = 0
    for w1 in outer_weight_range(w, n):
        if not a1[w1]:
            continue
        row_w1 = binomial_row(w1)
        row_rest = binomial_row(n - w1)
        acc = 0
        for i in overlap_range(w, n, w1):
            if b[w - 2 * i]:
                acc += row_w1[i] * row_rest[w - w1 - i] * b[w - 2 * i]
        s += a1[w1] * acc
    return Fraction(s, L * D)


def combine_prefix(A0_prefix, A1_prefix, n: int, W: int) -> tuple:
    """(A_0, ..., A_W) of combine, from the component coefficients of
    weights 0..min(W, n) alone. Longer prefixes are accepted; the
    extra entries are ignored.

    >>> combine_prefix([1, 0, 0, 1], [1, 0, 3, 0], 3, 4)
    (Fraction(1, 1), Fraction(0, 1), Fraction(0, 1), Fraction(4, 1), Fraction(3, 1))
    """
    if n < 1:
        raise DomainError("component length must be >= 1, got %d" % n)
    if not 0 <= W <= 2 * n:
        raise WeightRangeError("truncation weight %d out of range 0..%d" % (W, 2 * n))
    need = min(W, n) + 1
    for name, prefix in (('A0', A0_prefix), ('A1', A1_prefix)):
        if len(prefix) < need:
            raise LengthMismatchError("%s prefix has %d coefficients, need %d"
                                      % (name, len(prefix), need))
    return _combine_upto(A0_prefix, A1_prefix, n, W)


def combine_reference(A0: WeightEnumerator, A1: WeightEnumerator) -> WeightEnumerator:
    """combine, evaluated term by term with plotkin_coefficient over the
    exact index sets. Slow; used to check the fast path."""
    n = _check_lengths(A0, A1)
    coeffs = []
    for w in range(2 * n + 1):
        total = Fraction(0)
        for w1 in outer_weight_range(w, n):
            for i in overlap_range(w, n, w1):
                total += plotkin_coefficient(n, w, w1, i) * A1[w1] * A0[w - 2 * i]
        coeffs.append(total)
    return WeightEnumerator(2 * n, coeffs)


def min_distance_combine(d0: int, d1: int) -> int:
    """
    >>> min_distance_combine(3, 2), min_distance_combine(4, 4), min_distance_combine(8, 2)
    (3, 4, 4)
    """
    if d0 < 1 or d1 < 1:
        raise DomainError("minimum distances must be >= 1, got d0=%d, d1=%d" % (d0, d1))
    return min(d0, 2 * d1)
