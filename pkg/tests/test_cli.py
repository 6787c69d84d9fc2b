import unittest
import io
import json
import os
import tempfile
from unittest import mock
from pygolomb.cli import parse_args, run, CommandConfig, parse_init

def execute(argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(parse_args(argv), out, err)
    return status, out.getvalue(), err.getvalue()

class TestCli(unittest.TestCase):

    def testGen(self):
        status, out, _ = execute(['gen', '--j', '2', '--s', '0', '--lambda', '1',
                                  '--init', '1,3,3', '--n', '9', '--format', 'plain'])
        self.assertEqual(status, 0)
        self.assertEqual(out, "1 3 3 3 5 5 5 5 5\n")

    def testBFile(self):
        status, out, _ = execute(['bfile', '--j', '1', '--s', '0', '--lambda', '1', '--n', '5'])
        self.assertEqual(status, 0)
        self.assertEqual(out, "1 1\n2 2\n3 2\n4 3\n5 3\n")

        for engine in ('tree', 'closed'):
            status, other, _ = execute(['bfile', '--j', '1', '--s', '0', '--n', '5', '--engine', engine])
            self.assertEqual(status, 0)
            self.assertEqual(other, out)

    def testEnginesAgree(self):
        outputs = []
        for cmd in ('gen', 'tree', 'closed'):
            status, out, _ = execute([cmd, '--j', '3', '--s', '2', '--n', '300'])
            self.assertEqual(status, 0)
            outputs.append(out)
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(outputs[0], outputs[2])

    def testGeneral(self):
        status, out, _ = execute(['gen', '--k', '2', '--j', '1', '--s', '0', '--nu', '0',
                                  '--init', 'ones:2', '--n', '17'])
        self.assertEqual(status, 0)
        self.assertEqual(out, "1 1 2 2 3 4 4 4 5 6 6 7 8 8 8 8 9\n")

    def testTreeJson(self):
        status, out, _ = execute(['tree', '--j', '2', '--s', '4', '--lambda', '3',
                                  '--variant', 'tail', '--n', '17', '--format', 'json'])
        self.assertEqual(status, 0)
        doc = json.loads(out)
        self.assertEqual(doc['source'], 'tree')
        self.assertEqual(doc['params']['variant'], 'tail')
        self.assertEqual(doc['params']['lambda'], 3)
        self.assertEqual(doc['values'], [1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 5, 5, 7, 7, 7, 9])

    def testCsv(self):
        status, out, _ = execute(['closed', '--j', '1', '--s', '3', '--n', '3',
                                  '--formula', 'g1s1', '--format', 'csv'])
        self.assertEqual(status, 0)
        self.assertEqual(out, "n,value\n1,1\n2,1\n3,1\n")

    def testFreq(self):
        status, out, _ = execute(['freq', '--j', '2', '--s', '4', '--n', '40'])
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "value count formula")
        self.assertIn("1 5 5", lines)
        self.assertIn("2 0 0", lines)
        self.assertIn("3 7 7", lines)
        self.assertIn("7 11 11", lines)
        self.assertEqual(len(lines), 9)

    def testPrune(self):
        status, out, _ = execute(['prune', '--j', '2', '--s', '4', '--lambda', '3', '--n', '52'])
        self.assertEqual(status, 0)
        self.assertIn("K(52) -> K(31): 21 labels removed, weight drop 6, case MULTI_CHAIN", out)
        self.assertIn("trace: 52 31 16", out)

        status, _, err = execute(['prune', '--j', '2', '--s', '4', '--lambda', '3', '--n', '10'])
        self.assertEqual(status, 2)
        self.assertIn("error", err)

        status, out, err = execute(['prune', '--j', '2', '--s', '4', '--lambda', '3',
                                    '--variant', 'tail', '--n', '52'])
        self.assertEqual(status, 2)
        self.assertEqual(out, "")
        self.assertIn("knot variant", err)

    def testVerify(self):
        sizes = ['--golomb-nmax', '2000', '--a001650-nmax', '1000', '--weight-nmax', '100',
                 '--specialization-nmax', '100', '--tree-nmax', '60', '--closed-nmax', '200',
                 '--reduction-nmax', '300', '--g1s1-nmax', '600', '--leaf-path-nmax', '200',
                 '--oracle-configs', '4']
        config = parse_args(['verify', '--grid-default'] + sizes)
        self.assertEqual((config.weight_nmax, config.oracle_configs), (100, 4))

        status, out, _ = execute(['verify', '--grid-default'] + sizes)
        self.assertEqual(status, 0)
        self.assertRegex(out.splitlines()[-1], r"^\d+ checks, 0 failures, ")

        # a wrong reference prefix makes the run fail
        with mock.patch('pygolomb.verify.KNOT_PREFIX', [1, 1, 1, 1, 1, 5]):
            status, out, _ = execute(['verify'] + sizes)
        self.assertEqual(status, 1)
        self.assertRegex(out.splitlines()[-1], r"^\d+ checks, 1 failures, ")

    def testDot(self):
        status, out, _ = execute(['dot', '--j', '2', '--s', '4', '--lambda', '3', '--depth', '3'])
        self.assertEqual(status, 0)
        self.assertTrue(out.startswith("digraph K {"))
        self.assertIn('xlabel="knot 3"', out)

        status, out, _ = execute(['dot', '--j', '2', '--s', '4', '--lambda', '3', '--upto', '20'])
        self.assertEqual(status, 0)
        self.assertIn('label="18–20"', out)

    def testEngineError(self):
        status, out, err = execute(['gen', '--j', '1', '--s', '0', '--lambda', '1',
                                    '--init', '5', '--n', '3'])
        self.assertEqual(status, 3)
        self.assertEqual(out, "")
        self.assertIn("n=2", err)

    def testInvalidArguments(self):
        status, _, _ = execute(['closed', '--j', '1', '--s', '0', '--lambda', '2', '--n', '5'])
        self.assertEqual(status, 2)

        status, _, _ = execute(['gen', '--j', '0', '--n', '5'])
        self.assertEqual(status, 2)

        with self.assertRaises(SystemExit) as ctx:
            parse_args(['gen', '--j', '1'])
        self.assertEqual(ctx.exception.code, 2)

        with self.assertRaises(SystemExit):
            parse_args(['gen', '--n', '5', '--init', 'ones:x'])

    def testInitFile(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'init.txt')
            with open(path, 'w') as f:
                f.write("# initial values\n1 1\n2 3\n3 3\n")
            status, out, _ = execute(['gen', '--j', '2', '--init-file', path, '--n', '6'])
            self.assertEqual(status, 0)
            self.assertEqual(out, "1 3 3 3 5 5\n")

            status, _, _ = execute(['gen', '--j', '2', '--init-file', os.path.join(tmp, 'missing'), '--n', '6'])
            self.assertEqual(status, 2)

    def testParse(self):
        self.assertEqual(parse_init(None), ('tree', (), 0))
        self.assertEqual(parse_init('ones:4'), ('ones', (), 4))
        self.assertEqual(parse_init('1,3,3'), ('list', (1, 3, 3), 0))

        config = parse_args(['bfile', '--j', '2', '--s', '1', '--n', '10', '--variant', 'tail'])
        self.assertIsInstance(config, CommandConfig)
        self.assertEqual((config.j, config.s, config.lam, config.n), (2, 1, 1, 10))
        self.assertEqual(config.variant.value, 'tail')

if __name__ == '__main__':
    unittest.main()
