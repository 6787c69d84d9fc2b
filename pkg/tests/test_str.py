import unittest
import pygolomb
from pygolomb import (GolombParams, InitialConditions, TreeVariant, eval_golomb, prefix_view,
                      build_skeleton, assign_labels)
from pygolomb.grid import ParameterGrid

class TestString(unittest.TestCase):

    def test_strings(self):
        """
        Test the string representation of the main objects
        """
        seq = eval_golomb(GolombParams(1, 0, 1), InitialConditions([1]), 5)
        ans = "SequenceBuffer; source=recursion, params=GolombParams(j=1, s=0, lam=1), length=5\n"
        ans += " 1 2 2 3 3\n"
        self.assertEqual(str(seq), ans)

        grid = ParameterGrid.build('small', [1], [0], [1, 2])
        ans = "ParameterGrid: small\n"
        ans += " j=1 s=0 lambda=1\n"
        ans += " j=1 s=0 lambda=2\n"
        self.assertEqual(str(grid), ans)

        view = prefix_view(TreeVariant.KNOT, 2, 4, 3, 13)
        ans = "K(13); variant=knot, j=2, s=4, lambda=3, m=1, incomplete\n"
        ans += " 00 | supernode 4/4 knot chains [0, 0, 0]\n"
        ans += " 01 | supernode 4/4 knot chains [2, 0, 0]\n"
        self.assertEqual(str(view), ans)

        tree = assign_labels(build_skeleton(TreeVariant.TAIL, 2, 3, 3), 4)
        self.assertEqual(str(tree), "LabeledTree; variant=tail, j=2, s=4, lambda=3, labels=57\n")
        self.assertEqual(str(InitialConditions([1, 3, 3])), "InitialConditions(1,3,3)")

    def test_version(self):
        strver = pygolomb.__version__.split('.')
        self.assertTrue(strver[0].isnumeric())
        self.assertTrue(strver[1].isnumeric())
        self.assertTrue(strver[2].isnumeric())
        self.assertTrue(strver[3].isnumeric())

if __name__ == '__main__':
    unittest.main()
