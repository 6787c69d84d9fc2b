import unittest
import io
import json
from pygolomb import (TreeVariant, GolombParams, InitialConditions, eval_golomb, build_skeleton,
                      assign_labels, leaf_weight_sequence)
from pygolomb.export import (write_bfile, read_bfile, read_values, write_plain, write_csv, to_json,
                             tree_to_dot)

class TestExport(unittest.TestCase):

    def testBFile(self):
        seq = eval_golomb(GolombParams(1, 0, 1), InitialConditions([1]), 5)
        f = io.StringIO()
        write_bfile(seq, f)
        self.assertEqual(f.getvalue(), "1 1\n2 2\n3 2\n4 3\n5 3\n")

        # round trip
        seq = leaf_weight_sequence(TreeVariant.KNOT, 2, 4, 3, 500)
        f = io.StringIO()
        write_bfile(seq, f)
        f.seek(0)
        self.assertEqual(read_bfile(f), seq.tolist())

    def testReadBFileComments(self):
        text = "# generated\n\n1 1\n2 3\n# middle\n3 3\n"
        self.assertEqual(read_bfile(io.StringIO(text)), [1, 3, 3])

        with self.assertRaises(ValueError):
            read_bfile(io.StringIO("1 1\n3 3\n"))
        with self.assertRaises(ValueError):
            read_bfile(io.StringIO("1 1 1\n"))

    def testReadValues(self):
        self.assertEqual(read_values(io.StringIO("1,3,3\n")), [1, 3, 3])
        self.assertEqual(read_values(io.StringIO("1 3 3")), [1, 3, 3])
        self.assertEqual(read_values(io.StringIO("1 3\n")), [3])
        self.assertEqual(read_values(io.StringIO("1,3\n")), [1, 3])
        self.assertEqual(read_values(io.StringIO("2 3\n")), [2, 3])
        self.assertEqual(read_values(io.StringIO("1 1\n2 3\n3 3\n")), [1, 3, 3])

        # a single-term b-file reads back as one value
        seq = eval_golomb(GolombParams(1, 0, 1), InitialConditions([7]), 1)
        f = io.StringIO()
        write_bfile(seq, f)
        self.assertEqual(f.getvalue(), "1 7\n")
        f.seek(0)
        self.assertEqual(read_values(f), [7])

    def testPlainCsvJson(self):
        seq = eval_golomb(GolombParams(1, 0, 1), InitialConditions([1]), 4)

        f = io.StringIO()
        write_plain(seq, f)
        self.assertEqual(f.getvalue(), "1 2 2 3\n")

        f = io.StringIO()
        write_csv(seq, f)
        self.assertEqual(f.getvalue(), "n,value\n1,1\n2,2\n3,2\n4,3\n")

        doc = json.loads(to_json(seq))
        self.assertEqual(doc['params'], {'j': 1, 's': 0, 'lambda': 1})
        self.assertEqual(doc['source'], 'recursion')
        self.assertEqual(doc['values'], [1, 2, 2, 3])

        doc = json.loads(to_json(seq, extra={'variant': 'knot'}))
        self.assertEqual(doc['params']['variant'], 'knot')

    def testDot(self):
        tree = assign_labels(build_skeleton(TreeVariant.KNOT, 2, 3, 1), 4)
        dot = tree_to_dot(tree)
        self.assertTrue(dot.startswith("digraph K {\n    node [shape=ellipse];\n"))
        self.assertTrue(dot.endswith("}\n"))
        self.assertIn('[shape=box, label="2–5"]', dot)
        self.assertIn('[label="1", xlabel="initial"]', dot)
        self.assertIn('[label="6", xlabel="knot 0"]', dot)
        self.assertIn('[label="11", xlabel="knot 1"]', dot)
        self.assertIn('[label="17"]', dot)
        self.assertEqual(dot.count(" -> "), len(tree.skeleton) - 1)

        dot = tree_to_dot(tree, upto=8)
        self.assertIn('[shape=box, label="7–8"]', dot)
        self.assertNotIn('label="11"', dot)

        tree = assign_labels(build_skeleton(TreeVariant.TAIL, 2, 3, 1), 4)
        dot = tree_to_dot(tree)
        self.assertIn('[label="17", xlabel="tail 1"]', dot)

if __name__ == '__main__':
    unittest.main()
