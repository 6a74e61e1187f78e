from .version import __version__
from .errors import (PlotkinError, DomainError, LengthMismatchError, WeightRangeError,
                     ParseError, BudgetExceededError, RankDeficiencyWarning)
from .combinatorics import (BinomialTable, binomial, plotkin_coefficient,
                            hypergeometric_coefficient)
from .enumerator import (WeightEnumerator, parse_poly, format_poly,
                         total_mass, min_positive_weight)
from .plotkin import (combine, combine_single_weight, combine_prefix,
                      min_distance_combine)
from .codetree import (Leaf, Branch, FROZEN, ACTIVE, rm_tree, tree_from_active_set,
                       ensemble_wef, spectrum_prefix, generator_matrix,
                       dimension, length, active_set, min_distance,
                       tree_to_json, tree_from_json, tree_json_depth)
from .oracle import (BinaryMatrix, Permutation, exact_wef_bruteforce,
                     ensemble_wef_exhaustive, ensemble_wef_montecarlo,
                     uniform_permutation, lexicographic_permutations)
from .bounds import (ChannelPoint, q_function, truncated_union_bound,
                     union_bound_from_components, bound_table)
from .tracing import traced, CallRecord
from .config import get_settings, reload_settings

__all__ = [
    '__version__',
    'PlotkinError', 'DomainError', 'LengthMismatchError', 'WeightRangeError',
    'ParseError', 'BudgetExceededError', 'RankDeficiencyWarning',

    'BinomialTable', 'binomial', 'plotkin_coefficient', 'hypergeometric_coefficient',
    'WeightEnumerator', 'parse_poly', 'format_poly', 'total_mass', 'min_positive_weight',
    'combine', 'combine_single_weight', 'combine_prefix', 'min_distance_combine',

    'Leaf', 'Branch', 'FROZEN', 'ACTIVE', 'rm_tree', 'tree_from_active_set',
    'ensemble_wef', 'spectrum_prefix', 'generator_matrix',
    'dimension', 'length', 'active_set', 'min_distance', 'tree_to_json', 'tree_from_json',
    'tree_json_depth',

    'BinaryMatrix', 'Permutation', 'exact_wef_bruteforce',
    'ensemble_wef_exhaustive', 'ensemble_wef_montecarlo',
    'uniform_permutation', 'lexicographic_permutations',

    'ChannelPoint', 'q_function', 'truncated_union_bound',
    'union_bound_from_components', 'bound_table',

    'traced', 'CallRecord', 'get_settings', 'reload_settings',
]
