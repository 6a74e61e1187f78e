__doc__ = """
Multilevel Plotkin construction over a full binary tree.

A CodeTree is a Leaf (frozen: the length-1 code {0}; active: {0, 1}) or a
Branch(left, right) whose code is {(u + vP, v) : u in left, v in right},
with an independent uniform permutation P at every branch. The left child
is the u (C0) side, the right child the v (C1) side. All leaves sit at the
same depth m, so the length is 2**m.

Leaf indexing: leaf i of a depth-m tree is reached by reading the m bits
of i from the most significant one down, 0 = go left, 1 = go right. An
in-order walk visits leaves 0, 1, ..., 2**m - 1. In this indexing
rm_tree(r, m) has leaf i active iff popcount(i) >= m - r.

Tree JSON:
    {"m": 3, "active": [3, 5, 6, 7]}     -- depth and active leaf indices
    {"rm": {"r": 1, "m": 3}}             -- a Reed-Muller tree
"""
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .enumerator import WeightEnumerator
from .errors import DomainError, LengthMismatchError, ParseError, WeightRangeError
from .oracle import BinaryMatrix
from .plotkin import combine, combine_prefix, min_distance_combine
from .tracing import traced
from . import config


__all__ = ['Leaf', 'Branch', 'FROZEN', 'ACTIVE',
           'depth', 'length', 'dimension', 'active_set',
           'rm_tree', 'tree_from_active_set',
           'tree_to_json', 'tree_from_json', 'tree_json_depth',
           'ensemble_wef', 'spectrum_prefix', 'generator_matrix', 'min_distance']


class Leaf(namedtuple('Leaf', ('active',))):
    __slots__ = ()

    def __repr__(self):
        return 'ACTIVE' if self.active else 'FROZEN'


FROZEN = Leaf(False)
ACTIVE = Leaf(True)


class Branch(namedtuple('Branch', ('left', 'right'))):
    """Plotkin step: left child supplies u, right child supplies v.
    Both children must have the same depth."""
    __slots__ = ()

    def __new__(cls, left, right):
        if depth(left) != depth(right):
            raise LengthMismatchError("children of a Branch must have equal length, got %d and %d"
                                      % (length(left), length(right)))
        return super().__new__(cls, left, right)


def depth(tree) -> int:
    m = 0
    while isinstance(tree, Branch):
        tree = tree.left
        m += 1
    return m


def length(tree) -> int:
    return 1 << depth(tree)


def dimension(tree) -> int:
    """Number of active leaves.
    >>> dimension(rm_tree(1, 3)), length(rm_tree(1, 3))
    (4, 8)
    """
    return _dimension(tree)


@lru_cache(maxsize=4096)
def _dimension(tree) -> int:
    if isinstance(tree, Leaf):
        return int(tree.active)
    return _dimension(tree.left) + _dimension(tree.right)


def _leaves(tree):
    """Leaves in index order."""
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            yield node
        else:
            stack.append(node.right)
            stack.append(node.left)


def active_set(tree) -> frozenset:
    """
    >>> sorted(active_set(rm_tree(1, 3)))
    [3, 5, 6, 7]
    """
    return frozenset(i for i, leaf in enumerate(_leaves(tree)) if leaf.active)


#----------------------------------------------------------------------------
# builders
#----------------------------------------------------------------------------
@lru_cache(maxsize=None)
def rm_tree(r: int, m: int):
    """Tree of RM(r, m): left = rm_tree(r-1, m-1), right = rm_tree(r, m-1).
    r < 0 gives the zero code, r >= m the full space.

    >>> rm_tree(0, 1)
    Branch(left=FROZEN, right=ACTIVE)
    """
    if m < 0:
        raise DomainError("depth m must be >= 0, got %d" % m)
    if m == 0:
        return ACTIVE if r >= 0 else FROZEN
    return Branch(rm_tree(r - 1, m - 1), rm_tree(r, m - 1))


def tree_from_active_set(m: int, active) -> Branch:
    """Depth-m tree whose leaf i is active iff i is in `active`.

    >>> tree_from_active_set(3, {3, 5, 6, 7}) == rm_tree(1, 3)
    True
    >>> tree_from_active_set(0, set())
    FROZEN
    """
    if m < 0:
        raise DomainError("depth m must be >= 0, got %d" % m)
    active = set(active)
    bad = sorted(i for i in active if not (isinstance(i, int) and 0 <= i < (1 << m)))
    if bad:
        raise DomainError("leaf indices out of range 0..%d: %s" % ((1 << m) - 1, bad))

    def build(level, offset):
        if level == 0:
            return ACTIVE if offset in active else FROZEN
        half = 1 << (level - 1)
        return Branch(build(level - 1, offset), build(level - 1, offset + half))

    return build(m, 0)


def tree_to_json(tree) -> dict:
    return {'m': depth(tree), 'active': sorted(active_set(tree))}


def _as_int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError("%s must be an integer, got %r" % (what, value))
    return value


def tree_json_depth(obj) -> int:
    """Depth m named by a tree JSON object, read without building the
    tree. Raises ParseError on malformed input.

    >>> tree_json_depth({"rm": {"r": 0, "m": 5000}})
    5000
    """
    if not isinstance(obj, dict):
        raise ParseError("tree JSON must be an object")
    if 'rm' in obj:
        rm = obj['rm']
        if not isinstance(rm, dict) or 'r' not in rm or 'm' not in rm:
            raise ParseError('"rm" needs keys "r" and "m"')
        _as_int(rm['r'], '"r"')
        return _as_int(rm['m'], '"m"')
    if 'm' in obj and 'active' in obj:
        if not isinstance(obj['active'], list):
            raise ParseError('"active" must be a list of leaf indices')
        return _as_int(obj['m'], '"m"')
    raise ParseError('tree JSON needs either "rm" or both "m" and "active"')


def tree_from_json(obj):
    """Inverse of tree_to_json; also accepts {"rm": {"r": .., "m": ..}}.
    Raises ParseError on malformed input, DomainError on bad indices.
    The whole tree is built: check tree_json_depth first for large m."""
    m = tree_json_depth(obj)
    if 'rm' in obj:
        return rm_tree(obj['rm']['r'], m)
    active = [_as_int(i, 'leaf index') for i in obj['active']]
    return tree_from_active_set(m, active)


#----------------------------------------------------------------------------
# spectra
#----------------------------------------------------------------------------
_FROZEN_WEF = WeightEnumerator(1, [1, 0])
_ACTIVE_WEF = WeightEnumerator(1, [1, 1])


def _spectrum(tree, memo):
    if memo is not None and tree in memo:
        return memo[tree]
    if isinstance(tree, Leaf):
        A = _ACTIVE_WEF if tree.active else _FROZEN_WEF
    else:
        A = combine(_spectrum(tree.left, memo), _spectrum(tree.right, memo))
    if memo is not None:
        memo[tree] = A
    return A


@traced()
def ensemble_wef(tree) -> WeightEnumerator:
    """Ensemble spectrum of the tree, evaluated leaves to root: frozen
    leaf 1, active leaf 1 + x, branch combine(left, right).

    >>> print(ensemble_wef(rm_tree(1, 3)))
    1 + 14x^4 + x^8
    """
    memo = {} if config.get_settings().memoize else None
    return _spectrum(tree, memo)


def _prefix(tree, W, memo):
    key = (tree, W)
    if key in memo:
        return memo[key]
    if isinstance(tree, Leaf):
        p = (1, 1) if tree.active else (1, 0)
        p = p[:W + 1]
    else:
        n = length(tree.left)
        p = combine_prefix(_prefix(tree.left, W, memo), _prefix(tree.right, W, memo),
                           n, min(W, 2 * n))
    memo[key] = p
    return p


@traced()
def spectrum_prefix(tree, W: int) -> tuple:
    """(A_0, ..., A_min(W, n)) of ensemble_wef(tree), computed from
    truncated spectra at every node.

    >>> spectrum_prefix(rm_tree(1, 3), 4)
    (Fraction(1, 1), Fraction(0, 1), Fraction(0, 1), Fraction(0, 1), Fraction(14, 1))
    """
    if W < 0:
        raise WeightRangeError("truncation weight must be >= 0, got %d" % W)
    return tuple(Fraction(c) for c in _prefix(tree, W, {}))


def generator_matrix(tree) -> BinaryMatrix:
    """Generator matrix of the identity-permutation instance: left rows
    become (g | 0), right rows (g | g), left rows first.

    >>> generator_matrix(rm_tree(0, 1)).to_json()
    {'n': 2, 'rows': ['11']}
    """
    def build(node):
        if isinstance(node, Leaf):
            return np.ones((1, 1), dtype=np.uint8) if node.active else np.zeros((0, 1), dtype=np.uint8)
        G0, G1 = build(node.left), build(node.right)
        return np.vstack([np.hstack([G0, np.zeros_like(G0)]), np.hstack([G1, G1])])

    return BinaryMatrix(build(tree), n=length(tree))


def min_distance(tree):
    """Minimum distance read off the tree: active leaf 1, frozen leaf
    none, branch min(d0, 2 d1) skipping zero-code children.

    >>> min_distance(rm_tree(1, 3)), min_distance(rm_tree(-1, 3))
    (4, None)
    """
    if isinstance(tree, Leaf):
        return 1 if tree.active else None
    d0, d1 = min_distance(tree.left), min_distance(tree.right)
    if d1 is None:
        return d0
    if d0 is None:
        return 2 * d1
    return min_distance_combine(d0, d1)
