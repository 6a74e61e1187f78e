__doc__ = """
Independent ground truth for the combine formula.

    exact_wef_bruteforce(G)              -- spectrum of the row space of G
    ensemble_wef_exhaustive(G0, G1)      -- average spectrum of
                                            {(u + vP, v)} over all n! P
    ensemble_wef_montecarlo(G0, G1, ...) -- the same average estimated from
                                            seeded uniform draws of P

Bit conventions: a BinaryMatrix row is a numpy uint8 vector, coordinate 0
first (leftmost character of the text form). A Permutation p sends
coordinate i to coordinate p[i]: p(x)[p[i]] = x[i].

Random permutations come from numpy's Generator with the PCG64 bit
generator, np.random.default_rng(seed): a draw of n points is the
argsort of n uniform doubles from Generator.random. A given seed gives
the same permutations on every platform for a given numpy version;
uniform_permutation(3, 42) is Permutation([1, 0, 2]).

ensemble_wef_exhaustive walks the n! permutations in lexicographic
order by successor steps (lexicographic_permutations).
"""
from collections import namedtuple
from fractions import Fraction
import logging
import math
import warnings

import numpy as np

from .config import check_budget
from .enumerator import WeightEnumerator
from .errors import DomainError, LengthMismatchError, ParseError, RankDeficiencyWarning
from .helpers import bits_from_str, bits_to_str, popcount_rows
from .tracing import traced


__all__ = ['BinaryMatrix', 'Permutation', 'MonteCarloEstimate',
           'exact_wef_bruteforce', 'ensemble_wef_exhaustive', 'ensemble_wef_montecarlo',
           'uniform_permutation', 'lexicographic_permutations']

logger = logging.getLogger(__name__)

# row-space enumeration is split into a table of 2**_LOW_BITS codewords
# XORed with each combination of the remaining rows
_LOW_BITS = 12
# upper bound on u-v pairs handled by one numpy block
_PAIR_BLOCK = 1 << 16


#----------------------------------------------------------------------------
# BinaryMatrix
#----------------------------------------------------------------------------
class BinaryMatrix():
    """k x n matrix over GF(2), immutable.

    >>> G = BinaryMatrix.from_rows(['110', '011'])
    >>> G.k, G.n
    (2, 3)
    >>> G.to_json()
    {'n': 3, 'rows': ['110', '011']}
    >>> BinaryMatrix.from_rows(['110', '011', '101']).rank()
    2
    """
    __slots__ = ('_rows',)

    def __init__(self, rows, n=None):
        arr = np.asarray(rows)
        if arr.size == 0:
            if n is None:
                n = arr.shape[1] if arr.ndim == 2 else None
            if n is None:
                raise DomainError("an empty BinaryMatrix needs its length n")
            arr = np.zeros((0, n), dtype=np.uint8)
        if arr.ndim != 2:
            raise DomainError("a BinaryMatrix needs a 2-D array, got %d-D" % arr.ndim)
        if n is not None and arr.shape[1] != n:
            raise LengthMismatchError("rows have length %d, expected %d" % (arr.shape[1], n))
        if not np.isin(arr, (0, 1)).all():
            raise DomainError("BinaryMatrix entries must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.flags.writeable = False
        self._rows = arr

    @classmethod
    def from_rows(cls, strings, n=None):
        """Rows given as bit strings, leftmost character = coordinate 0."""
        strings = list(strings)
        if not strings:
            return cls(np.zeros((0, n if n is not None else 0), dtype=np.uint8), n=n)
        lengths = {len(s) for s in strings}
        if len(lengths) > 1:
            raise LengthMismatchError("rows of different lengths: %s" % sorted(lengths))
        return cls([bits_from_str(s) for s in strings], n=n)

    @property
    def k(self) -> int:
        return self._rows.shape[0]

    @property
    def n(self) -> int:
        return self._rows.shape[1]

    @property
    def rows(self) -> np.ndarray:
        """Read-only uint8 array of shape (k, n)."""
        return self._rows

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self._rows.shape == other._rows.shape and np.array_equal(self._rows, other._rows)

    def __hash__(self):
        return hash((self._rows.shape, self._rows.tobytes()))

    def __repr__(self):
        return "BinaryMatrix(%r, n=%d)" % ([bits_to_str(r) for r in self._rows], self.n)

    def to_json(self) -> dict:
        return {'n': self.n, 'rows': [bits_to_str(r) for r in self._rows]}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or 'n' not in obj or 'rows' not in obj:
            raise ParseError('matrix JSON needs keys "n" and "rows"')
        n, rows = obj['n'], obj['rows']
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError('"n" must be a positive integer, got %r' % (n,))
        if not isinstance(rows, list) or not all(isinstance(r, str) for r in rows):
            raise ParseError('"rows" must be a list of bit strings')
        for idx, r in enumerate(rows):
            if len(r) != n:
                raise LengthMismatchError("row %d has length %d, expected %d" % (idx, len(r), n))
        try:
            return cls.from_rows(rows, n=n)
        except ValueError as e:
            if isinstance(e, DomainError):
                raise
            raise ParseError(str(e)) from None

    def row_echelon(self):
        """Reduced row echelon form over GF(2), zero rows dropped;
        the result has rank() rows."""
        R = self._rows.copy()
        m, n = R.shape
        pivot_row = 0
        for col in range(n):
            if pivot_row == m:
                break
            nonzero = np.flatnonzero(R[pivot_row:, col])
            if nonzero.size == 0:
                continue
            found = pivot_row + nonzero[0]
            if found != pivot_row:
                R[[pivot_row, found]] = R[[found, pivot_row]]
            # clear the column everywhere else
            hits = np.flatnonzero(R[:, col])
            hits = hits[hits != pivot_row]
            R[hits] ^= R[pivot_row]
            pivot_row += 1
        return BinaryMatrix(R[:pivot_row], n=n)

    def rank(self) -> int:
        return self.row_echelon().k

    def permute_columns(self, perm):
        """Apply perm to every row."""
        if len(perm) != self.n:
            raise LengthMismatchError("permutation of %d points applied to length-%d rows"
                                      % (len(perm), self.n))
        out = np.empty_like(self._rows)
        out[:, perm.as_array()] = self._rows
        return BinaryMatrix(out, n=self.n)

    def _small_codewords(self) -> np.ndarray:
        k = self.k
        if k == 0:
            return np.zeros((1, self.n), dtype=np.uint8)
        messages = (np.arange(1 << k, dtype=np.int64)[:, None] >> np.arange(k)) & 1
        return ((messages @ self._rows.astype(np.int64)) & 1).astype(np.uint8)

    def _split(self):
        """Codewords of the first _LOW_BITS rows and of the remaining rows."""
        low = BinaryMatrix(self._rows[:_LOW_BITS], n=self.n)
        high = BinaryMatrix(self._rows[_LOW_BITS:], n=self.n)
        return low._small_codewords(), high._small_codewords()

    def codewords(self) -> np.ndarray:
        """All 2**k combinations of the rows, as a (2**k, n) uint8 array;
        combination number c uses row j iff bit j of c is set."""
        low, high = self._split()
        return (high[:, None, :] ^ low[None, :, :]).reshape(-1, self.n)

    def weight_counts(self) -> np.ndarray:
        """Histogram (length n+1, int64) of the weights of all 2**k row
        combinations; counts repeat when rows are dependent."""
        n = self.n
        counts = np.zeros(n + 1, dtype=np.int64)
        low, high = self._split()
        low_packed = np.packbits(low, axis=1)
        for h in np.packbits(high, axis=1):
            counts += np.bincount(popcount_rows(low_packed ^ h[None, :]), minlength=n + 1)
        return counts


#----------------------------------------------------------------------------
# Permutation
#----------------------------------------------------------------------------
class Permutation():
    """Bijection of {0, ..., n-1}; p(x)[p[i]] = x[i] on bit rows.

    >>> p = Permutation([2, 0, 1])
    >>> p([1, 1, 0])
    [1, 0, 1]
    >>> p.inverse()
    Permutation([1, 2, 0])
    >>> p.inverse()(p([1, 1, 0]))
    [1, 1, 0]
    >>> Permutation([0, 0, 1])
    Traceback (most recent call last):
    ...
    plotkin_wef.errors.DomainError: not a permutation of 0..2: [0, 0, 1]
    """
    __slots__ = ('_mapping',)

    def __init__(self, mapping):
        mapping = tuple(int(x) for x in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise DomainError("not a permutation of 0..%d: %s" % (len(mapping) - 1, list(mapping)))
        self._mapping = mapping

    @classmethod
    def identity(cls, n: int):
        return cls(range(n))

    @property
    def mapping(self) -> tuple:
        return self._mapping

    def as_array(self) -> np.ndarray:
        return np.array(self._mapping, dtype=np.intp)

    def __len__(self):
        return len(self._mapping)

    def __getitem__(self, i):
        return self._mapping[i]

    def inverse(self):
        inv = [0] * len(self._mapping)
        for i, j in enumerate(self._mapping):
            inv[j] = i
        return Permutation(inv)

    def apply(self, row):
        """Permute the coordinates of one bit row (list or 1-D array);
        returns the same kind of object."""
        if len(row) != len(self._mapping):
            raise LengthMismatchError("permutation of %d points applied to a length-%d row"
                                      % (len(self._mapping), len(row)))
        if isinstance(row, np.ndarray):
            out = np.empty_like(row)
            out[self.as_array()] = row
            return out
        out = [0] * len(row)
        for i, j in enumerate(self._mapping):
            out[j] = row[i]
        return out

    __call__ = apply

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._mapping == other._mapping

    def __hash__(self):
        return hash(self._mapping)

    def __repr__(self):
        return "Permutation(%r)" % (list(self._mapping),)


def lexicographic_permutations(n: int):
    """All n! permutations of 0..n-1, in lexicographic order of their
    mappings, each one the successor of the last.
    >>> [p.mapping for p in lexicographic_permutations(3)][:3]
    [(0, 1, 2), (0, 2, 1), (1, 0, 2)]
    """
    a = list(range(n))
    while True:
        yield Permutation(a)
        # rightmost ascent a[i] < a[i+1]
        i = n - 2
        while i >= 0 and a[i] > a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] < a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def uniform_permutation(n: int, rng) -> Permutation:
    """A uniformly random permutation of n points: the argsort of n
    uniform doubles. rng is a numpy.random.Generator, or a seed for
    np.random.default_rng.

    >>> uniform_permutation(3, 42)
    Permutation([1, 0, 2])
    >>> uniform_permutation(1, 7)
    Permutation([0])
    """
    if n < 1:
        raise DomainError("permutation size must be >= 1, got %d" % n)
    rng = np.random.default_rng(rng)
    return Permutation(np.argsort(rng.random(n), kind='stable'))


#----------------------------------------------------------------------------
# oracles
#----------------------------------------------------------------------------
def _basis(G: BinaryMatrix, name='G') -> BinaryMatrix:
    """Row-reduced basis of G's row space; warns if rows are dependent."""
    basis = G.row_echelon()
    if basis.k < G.k:
        msg = ("%s: %d rows have rank %d over GF(2); counting the row space once"
               % (name, G.k, basis.k))
        logger.warning(msg)
        warnings.warn(msg, RankDeficiencyWarning, stacklevel=3)
    return basis


def _check_pair(G0: BinaryMatrix, G1: BinaryMatrix):
    if G0.n != G1.n:
        raise LengthMismatchError("component lengths differ: %d and %d" % (G0.n, G1.n))


class _PairSpectrum():
    """Weight histograms of {(u + vP, v)} for fixed row spaces and a
    given permutation P."""
    def __init__(self, B0: BinaryMatrix, B1: BinaryMatrix):
        self.n = B0.n
        self.u_packed = np.packbits(B0.codewords(), axis=1)
        self.v_words = B1.codewords()
        self.v_weights = self.v_words.sum(axis=1, dtype=np.int64)
        self.chunk = max(1, _PAIR_BLOCK // self.v_words.shape[0])

    def histogram(self, perm_array) -> np.ndarray:
        n = self.n
        v_perm = np.empty_like(self.v_words)
        v_perm[:, perm_array] = self.v_words
        v_packed = np.packbits(v_perm, axis=1)
        counts = np.zeros(2 * n + 1, dtype=np.int64)
        for start in range(0, self.u_packed.shape[0], self.chunk):
            u = self.u_packed[start:start + self.chunk]
            xored = (u[:, None, :] ^ v_packed[None, :, :]).reshape(-1, u.shape[1])
            weights = (popcount_rows(xored).reshape(u.shape[0], -1)
                       + self.v_weights[None, :])
            counts += np.bincount(weights.ravel(), minlength=2 * n + 1)
        return counts


@traced()
def exact_wef_bruteforce(G: BinaryMatrix) -> WeightEnumerator:
    """Exact spectrum of the row space of G, by enumeration.

    Dependent rows raise a RankDeficiencyWarning; the row space is then
    counted once, so the mass is 2**rank.

    >>> print(exact_wef_bruteforce(BinaryMatrix.from_rows(['110', '011'])))
    1 + 3x^2
    """
    check_budget('bruteforce_max_dim', G.k)
    basis = _basis(G)
    return WeightEnumerator(G.n, basis.weight_counts().tolist())


@traced()
def ensemble_wef_exhaustive(G0: BinaryMatrix, G1: BinaryMatrix) -> WeightEnumerator:
    """Average spectrum of {(u + vP, v) : u in rowspace(G0), v in rowspace(G1)}
    over all n! permutations P, as exact rationals.

    >>> G0, G1 = BinaryMatrix.from_rows(['100']), BinaryMatrix.from_rows(['110'])
    >>> print(ensemble_wef_exhaustive(G0, G1))
    1 + x + 2/3x^3 + x^4 + 1/3x^5
    """
    _check_pair(G0, G1)
    n = G0.n
    check_budget('exhaustive_max_n', n)
    check_budget('exhaustive_max_dim', G0.k + G1.k)
    pair = _PairSpectrum(_basis(G0, 'G0'), _basis(G1, 'G1'))

    total = np.zeros(2 * n + 1, dtype=np.int64)
    for perm in lexicographic_permutations(n):
        total += pair.histogram(perm.as_array())
    n_fact = math.factorial(n)
    return WeightEnumerator(2 * n, [Fraction(int(t), n_fact) for t in total])


MonteCarloEstimate = namedtuple('MonteCarloEstimate', ('spectrum', 'stderr', 'samples', 'seed'))


@traced()
def ensemble_wef_montecarlo(G0: BinaryMatrix, G1: BinaryMatrix,
                            samples: int, seed: int) -> MonteCarloEstimate:
    """Mean spectrum of {(u + vP, v)} over `samples` independent uniform P
    drawn from np.random.default_rng(seed).

    Returns MonteCarloEstimate(spectrum, stderr, samples, seed): spectrum is
    the exact sample mean (a WeightEnumerator of rationals), stderr the
    per-weight sample standard deviation over sqrt(samples), as floats
    (all 0.0 when samples == 1).
    """
    _check_pair(G0, G1)
    if samples < 1:
        raise DomainError("samples must be >= 1, got %d" % samples)
    n = G0.n
    check_budget('montecarlo_max_dim', G0.k + G1.k)
    pair = _PairSpectrum(_basis(G0, 'G0'), _basis(G1, 'G1'))
    rng = np.random.default_rng(seed)

    total = np.zeros(2 * n + 1, dtype=np.int64)
    mean = np.zeros(2 * n + 1)
    m2 = np.zeros(2 * n + 1)
    for s in range(1, samples + 1):
        counts = pair.histogram(uniform_permutation(n, rng).as_array())
        total += counts
        # Welford update
        delta = counts - mean
        mean += delta / s
        m2 += delta * (counts - mean)

    if samples > 1:
        stderr = np.sqrt(m2 / (samples - 1)) / math.sqrt(samples)
    else:
        stderr = np.zeros(2 * n + 1)
    spectrum = WeightEnumerator(2 * n, [Fraction(int(t), samples) for t in total])
    logger.info("montecarlo: %d samples, seed %d", samples, seed)
    return MonteCarloEstimate(spectrum, tuple(float(e) for e in stderr), samples, seed)
