from plotkin_wef import combinatorics
from plotkin_wef.combinatorics import (BinomialTable, binomial, binomial_row,
                                       hypergeometric_coefficient, plotkin_coefficient)
from plotkin_wef.errors import DomainError
from plotkin_wef.helpers import outer_weight_range, overlap_range

from fractions import Fraction
import doctest
import math
import unittest


class TestBinomial(unittest.TestCase):

    def test_matches_math_comb(self):
        for n in range(0, 60):
            for k in range(-2, n + 3):
                expected = math.comb(n, k) if 0 <= k <= n else 0
                self.assertEqual(binomial(n, k), expected)

    def test_pascal_rule(self):
        for n in range(1, 40):
            for k in range(1, n):
                self.assertEqual(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k))

    def test_vandermonde(self):
        for m in range(0, 12):
            for n in range(0, 12):
                for r in range(0, m + n + 1):
                    self.assertEqual(sum(binomial(m, k) * binomial(n, r - k) for k in range(r + 1)),
                                     binomial(m + n, r))

    def test_row_sums(self):
        for n in range(0, 30):
            self.assertEqual(sum(binomial_row(n)), 2 ** n)

    def test_negative_n(self):
        self.assertRaises(DomainError, binomial, -1, 0)
        self.assertRaises(DomainError, binomial_row, -3)

    def test_table_grows(self):
        t = BinomialTable()
        self.assertEqual(t.max_n, 0)
        t.ensure(10)
        self.assertEqual(t.max_n, 10)
        t.ensure(5)
        self.assertEqual(t.max_n, 10)
        self.assertEqual(t.row(10)[5], 252)


class TestPlotkinCoefficient(unittest.TestCase):

    def test_worked_example_values(self):
        self.assertEqual(plotkin_coefficient(3, 4, 2, 1), Fraction(2, 3))
        self.assertEqual(plotkin_coefficient(3, 3, 0, 0), 1)
        self.assertEqual(plotkin_coefficient(3, 4, 2, 2), 1)
        # the verbatim formula gives 1/3 here
        self.assertEqual(plotkin_coefficient(3, 5, 2, 2), Fraction(1, 3))

    def test_reduced_form_agrees(self):
        for n in range(1, 21):
            for w in range(2 * n + 1):
                for w1 in outer_weight_range(w, n):
                    for i in overlap_range(w, n, w1):
                        self.assertEqual(plotkin_coefficient(n, w, w1, i),
                                         hypergeometric_coefficient(n, w, w1, i),
                                         msg="n=%d w=%d w1=%d i=%d" % (n, w, w1, i))

    def test_each_component_pair_spreads_unit_mass(self):
        """A pair of component weights (w1, j) contributes A1[w1] A0[j]
        codewords in total, spread over the weights w = j + 2i."""
        for n in range(1, 12):
            for w1 in range(n + 1):
                for j in range(n + 1):
                    total = Fraction(0)
                    for i in range(w1 + 1):
                        w = j + 2 * i
                        if (w <= 2 * n and w1 in outer_weight_range(w, n)
                                and i in overlap_range(w, n, w1)):
                            total += plotkin_coefficient(n, w, w1, i)
                    self.assertEqual(total, 1, msg="n=%d w1=%d j=%d" % (n, w1, j))

    def test_positive_on_domain(self):
        for n in range(1, 10):
            for w in range(2 * n + 1):
                for w1 in outer_weight_range(w, n):
                    for i in overlap_range(w, n, w1):
                        a = plotkin_coefficient(n, w, w1, i)
                        self.assertGreater(a, 0)

    def test_out_of_domain(self):
        self.assertRaises(DomainError, plotkin_coefficient, 0, 0, 0, 0)
        self.assertRaises(DomainError, plotkin_coefficient, 3, 7, 2, 2)
        self.assertRaises(DomainError, plotkin_coefficient, 3, 4, 0, 0)     # w1 < w - n
        self.assertRaises(DomainError, plotkin_coefficient, 3, 4, 2, 3)     # i > w1
        self.assertRaises(DomainError, hypergeometric_coefficient, 3, 2, 2, 1)  # w - w1 < i
        self.assertRaises(ValueError, plotkin_coefficient, 3, -1, 0, 0)


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(combinatorics))
    return tests
