from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from json import loads as json_loads
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase, main

from ftype.cli import main as ftype
from ftype.errors import ExitCode

PRESENTATIONS = Path(__file__).parent / 'presentations'
GOLDEN = Path(__file__).parent / 'golden'


def sample(name: str) -> str:
    return str(PRESENTATIONS / f'{name}.ftype')


class TestCommandLine(TestCase):
    def run_cli(self, *argv: str) -> tuple[int, str, str]:
        out, err = StringIO(), StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = ftype(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_analyze_json(self):
        code, out, _ = self.run_cli('analyze', sample('h1'), '--json')
        self.assertEqual(code, ExitCode.OK)
        self.assertEqual(json_loads(out), json_loads((GOLDEN / 'analyze-h1.json').read_text()))

    def test_analyze_text(self):
        code, out, _ = self.run_cli('analyze', sample('special'), '--deficiency-index', '6')
        self.assertEqual(code, ExitCode.OK)
        self.assertIn('chi = -1/3', out)
        self.assertIn('deficiency (index 6): 3', out)
        self.assertIn('tits: ContainsFreeRank2', out)

        code, out, _ = self.run_cli('analyze', sample('special'), '-m', '8')
        self.assertEqual(code, ExitCode.OK)
        self.assertIn('quotient by R^8: sum alpha_i + 1/m = 43/24', out)
        self.assertIn('  virtually torsion-free: True', out)

        code, _, err = self.run_cli('analyze', sample('special'), '-m', '1')
        self.assertEqual(code, ExitCode.VALIDATION)
        self.assertIn('m must be at least 2', err)

    def test_analyze_many(self):
        code, out, _ = self.run_cli('analyze', sample('trefoil'), sample('h3'))
        self.assertEqual(code, ExitCode.OK)
        self.assertIn(f"== {sample('trefoil')}", out)
        self.assertIn('tits: Solvable(H3)', out)

    def test_analyze_invalid(self):
        with TemporaryDirectory() as directory:
            path = Path(directory) / 'invalid.ftype'
            path.write_text("gens: a b c d\nexps: 2 3 2 3\np: 2\nU: a\nV: c d\n")
            code, out, _ = self.run_cli('analyze', str(path), sample('special'))
        self.assertEqual(code, ExitCode.VALIDATION)
        self.assertIn('u-finite-order', out)

    def test_parse_errors(self):
        code, _, err = self.run_cli('analyze', sample('missing'))
        self.assertEqual(code, ExitCode.PARSE)
        self.assertIn('cannot read', err)
        with TemporaryDirectory() as directory:
            path = Path(directory) / 'broken.ftype'
            path.write_text("gens: a b\nexps: 0 0\n")
            code, _, err = self.run_cli('rep', str(path))
        self.assertEqual(code, ExitCode.PARSE)
        self.assertIn("missing key", err)

    def test_word(self):
        code, out, _ = self.run_cli('word', sample('special'), '--word', 'a b c d', '--json')
        self.assertEqual(code, ExitCode.OK)
        result = json_loads(out)['result']
        self.assertTrue(result['trivial'])
        self.assertEqual(result['order_in_free_product'], 'Infinite')
        self.assertIsNone(result['proper_power'])

        code, out, _ = self.run_cli('word', sample('trefoil'), '--word', 'a^4')
        self.assertEqual(code, ExitCode.OK)
        self.assertIn('trivial: False', out)
        self.assertIn('proper_power: ProperPower(a, 4)', out)
        self.assertIn('involution_product: None', out)

        code, out, _ = self.run_cli('word', sample('trefoil'), '--word', 'a^4', '--json')
        self.assertEqual(json_loads(out)['result']['proper_power'], {'kind': 'ProperPower', 'root': 'a', 'k': 4})

        code, out, _ = self.run_cli('word', sample('h3'), '--word', 'a b')
        self.assertEqual(code, ExitCode.OK)
        self.assertIn('involution_product: TwoInvolutions(', out)
        self.assertNotIn('InvolutionPair', out)

        code, _, _ = self.run_cli('word', sample('trefoil'), '--word', 'a x')
        self.assertEqual(code, ExitCode.PARSE)

    def test_rep(self):
        code, out, _ = self.run_cli('rep', sample('special'), '--json', '--seed', '1')
        self.assertEqual(code, ExitCode.OK)
        result = json_loads(out)['result']
        self.assertEqual(result['class'], 'Faithful')
        self.assertTrue(result['passed'])
        self.assertLessEqual(max(result['residuals'].values()), 1e-9)

    def test_quotient(self):
        code, out, _ = self.run_cli('quotient', sample('special'), '--relator', 'a c', '-m', '3')
        self.assertEqual(code, ExitCode.OK)
        self.assertIn('rho(a c) has order 3 (special route)', out)

        code, _, err = self.run_cli('quotient', sample('special'), '--relator', 'a b', '-m', '3')
        self.assertEqual(code, ExitCode.VALIDATION)
        self.assertIn('error:', err)

        code, _, _ = self.run_cli('quotient', sample('trefoil'), '--relator', 'a b', '-m', '3')
        self.assertEqual(code, ExitCode.VALIDATION)

    def test_numeric_failure(self):
        code, _, err = self.run_cli('rep', sample('special'), '--margin', '10')
        self.assertEqual(code, ExitCode.NUMERIC)
        self.assertIn('verification failed', err)

    def test_selftest(self):
        code, out, _ = self.run_cli('selftest', sample('trefoil'), '--max-len', '3')
        self.assertEqual(code, ExitCode.OK)
        self.assertIn('skipped, class EssentialOnly', out)
        code, out, _ = self.run_cli('selftest', sample('special'), '--max-len', '3', '--words', '100')
        self.assertEqual(code, ExitCode.OK)
        self.assertIn('word problem against rho: 100 checked, 0 mismatches', out)

    def test_usage(self):
        with redirect_stderr(StringIO()), self.assertRaises(SystemExit):
            ftype([])


if __name__ == '__main__':
    main()
