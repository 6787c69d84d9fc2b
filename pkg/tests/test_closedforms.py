import unittest
from pygolomb import (TreeVariant, GolombParams, InitialConditions, eval_golomb, initial_conditions,
                      complete_frequencies, F_of, g_closed_lambda1, golomb_closed, g_1s1_closed,
                      g_via_reduction, reduce_params, FormulaInconsistency)
from pygolomb.closedforms import (F_of_iterative, closed_sequence, freq_lambda1, isqrt_exact,
                                  p_m, run_lengths)
import numpy as np

class TestClosedForms(unittest.TestCase):

    def testGolombClosed(self):
        seq = eval_golomb(GolombParams(1, 0, 1), InitialConditions([1]), 20000)
        closed = closed_sequence(1, 0, 20000, formula='golomb')
        np.testing.assert_equal(seq.values, closed.values)
        self.assertEqual(golomb_closed(1), 1)
        self.assertEqual(golomb_closed(6), 3)
        self.assertEqual(golomb_closed(7), 4)

    def testLambdaOneValue(self):
        """
        Test the closed form against the runs 1^5, 3^7, 5^9, 7^11 of j=2, s=4
        """
        self.assertEqual(F_of(2, 4, 26), 22)
        self.assertEqual(g_closed_lambda1(2, 4, 26), 7)
        self.assertEqual(g_closed_lambda1(2, 4, 5), 1)
        self.assertEqual(g_closed_lambda1(2, 4, 6), 3)
        self.assertEqual(g_closed_lambda1(2, 4, 21), 5)
        self.assertEqual(g_closed_lambda1(2, 4, 22), 7)
        self.assertEqual(run_lengths(2, 4, 4), [(1, 5), (3, 7), (5, 9), (7, 11)])

    def testClosedMatchesRecursion(self):
        """
        Test the lambda=1 closed form and frequencies against the recursion
        """
        for j in range(1, 5):
            for s in range(0, 5):
                seq = eval_golomb(GolombParams(j, s, 1), initial_conditions(TreeVariant.KNOT, j, s, 1), 5000)
                closed = closed_sequence(j, s, 5000)
                np.testing.assert_equal(seq.values, closed.values)

                freq = complete_frequencies(seq)
                for value in range(1, seq[5000]):
                    self.assertEqual(freq[value], freq_lambda1(j, s, value))

    def testLargeJ(self):
        """
        Test the first labels when j exceeds 2s+2
        """
        seq = eval_golomb(GolombParams(7, 0, 1), initial_conditions(TreeVariant.KNOT, 7, 0, 1), 200)
        for n in range(1, 201):
            self.assertEqual(g_closed_lambda1(7, 0, n), seq[n])

    def testFOf(self):
        for j in range(1, 5):
            for s in range(0, 5):
                for n in range(1, 500):
                    self.assertEqual(F_of(j, s, n), F_of_iterative(j, s, n))
        self.assertEqual(p_m(2, 4, 0).p_m, 6)
        self.assertEqual(p_m(2, 4, 2).p_m, 22)
        with self.assertRaises(ValueError):
            F_of(1, 0, 0)

    def testReduction(self):
        red = reduce_params(2, 5)
        self.assertEqual((red.q, red.r, red.alpha), (2, 1, 6))

        for j in range(1, 4):
            for s in range(j, j + 7):
                red = reduce_params(j, s)
                seq = eval_golomb(GolombParams(j, s, 1), initial_conditions(TreeVariant.KNOT, j, s, 1), 2000)
                base = eval_golomb(GolombParams(j, red.r, 1),
                                   initial_conditions(TreeVariant.KNOT, j, red.r, 1), 2000 + red.alpha)
                np.testing.assert_equal(seq.values, base.values[red.alpha:] - red.q * j)
                np.testing.assert_equal(closed_sequence(j, s, 2000, formula='reduced').values, seq.values)

        self.assertEqual(g_via_reduction(2, 5, 7), 3)
        with self.assertRaises(ValueError):
            reduce_params(3, 2)

    def testG1s1(self):
        for s in range(0, 7):
            seq = eval_golomb(GolombParams(1, s, 1), initial_conditions(TreeVariant.KNOT, 1, s, 1), 10000)
            np.testing.assert_equal(closed_sequence(1, s, 10000, formula='g1s1').values, seq.values)

        self.assertEqual(closed_sequence(1, 0, 1000, formula='g1s1'),
                         closed_sequence(1, 0, 1000, formula='golomb'))
        self.assertEqual(g_1s1_closed(1, 3), 2)
        self.assertEqual(g_1s1_closed(1, 6), 3)

    def testIsqrt(self):
        """
        Test the exact square root on random and boundary values
        """
        rng = np.random.default_rng(7)
        for x in rng.integers(0, 2**62, size=1000):
            x = int(x)
            root, exact = isqrt_exact(x)
            self.assertTrue(root * root <= x < (root + 1) * (root + 1))
            self.assertEqual(exact, root * root == x)
        self.assertEqual(isqrt_exact(2**62), (2**31, True))
        self.assertEqual(isqrt_exact(0), (0, True))
        with self.assertRaises(ValueError):
            isqrt_exact(-1)

    def testFormulaSelection(self):
        with self.assertRaises(ValueError):
            closed_sequence(2, 0, 10, formula='golomb')
        with self.assertRaises(ValueError):
            closed_sequence(2, 0, 10, formula='g1s1')
        with self.assertRaises(ValueError):
            closed_sequence(1, 0, 10, formula='unknown')
        self.assertTrue(issubclass(FormulaInconsistency, RuntimeError))

if __name__ == '__main__':
    unittest.main()
