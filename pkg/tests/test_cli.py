"""
Tests for the command-line surface and its exit codes
"""
import io
import json
import os
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

from dotenv import load_dotenv

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Load environment variables
load_dotenv()

import main
from cli.commands import (
    EXIT_FAILURE, EXIT_OK, EXIT_PARSE, EXIT_TIMEOUT, EXIT_VALIDATION,
    cmd_enum_latin, cmd_enum_pp, cmd_falsify, cmd_family, cmd_imbalance,
    cmd_min_exhaustive, cmd_search, cmd_table, cmd_verify,
)
from storage.documents import read_jsonl


def run(func, *args, **kwargs):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = func(*args, **kwargs)
    return code, out.getvalue(), err.getvalue()


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name, text):
        path = self.tmp / name
        path.write_text(text)
        return str(path)


class TestImbalanceCommand(CliTestCase):

    def test_cyclic_square(self):
        path = self.write('cyclic.txt', "0 1 2\n1 2 0\n2 0 1\n")
        code, out, _ = run(cmd_imbalance, path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('I = 0', out)

    def test_json_output(self):
        path = self.write('four.txt', "0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n")
        code, out, _ = run(cmd_imbalance, path, fmt='json')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['imbalance3'], 16)
        self.assertEqual(data['I'], '16/3')

    def test_invalid_square(self):
        path = self.write('bad.txt', "0 1\n0 1\n")
        code, _, err = run(cmd_imbalance, path)
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn('column 0', err)

    def test_non_square_grid(self):
        path = self.write('rect.txt', "0 1 2\n1 2 0\n")
        self.assertEqual(run(cmd_imbalance, path)[0], EXIT_VALIDATION)

    def test_unparseable(self):
        self.assertEqual(run(cmd_imbalance, self.write('junk.txt', "0 1\n1"))[0], EXIT_PARSE)
        self.assertEqual(run(cmd_imbalance, str(self.tmp / 'missing.txt'))[0], EXIT_PARSE)


class TestEnumerationCommands(CliTestCase):

    def test_enum_pp_counts(self):
        code, out, _ = run(cmd_enum_pp, 5, threads=1)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith('total='))

    def test_enum_pp_items(self):
        path = str(self.tmp / 'pp3.jsonl')
        code, _, _ = run(cmd_enum_pp, 3, count_only=False, threads=1, output=path)
        self.assertEqual(code, EXIT_OK)
        with open(path) as f:
            sigmas = sorted(doc.sigma for doc in read_jsonl(f))
        self.assertEqual(len(sigmas), 6)
        self.assertEqual(sigmas[0], (0, 1, 2))

    def test_enum_pp_guard(self):
        self.assertEqual(run(cmd_enum_pp, 18)[0], EXIT_VALIDATION)

    def test_enum_pp_timeout(self):
        code, _, _ = run(cmd_enum_pp, 15, threads=1, timeout=1e-9)
        self.assertEqual(code, EXIT_TIMEOUT)

    def test_enum_latin(self):
        code, out, _ = run(cmd_enum_latin, 4, threads=1, fmt='json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['total_count'], 576)
        self.assertEqual(run(cmd_enum_latin, 7)[0], EXIT_VALIDATION)

    def test_min_exhaustive(self):
        code, out, _ = run(cmd_min_exhaustive, 4, fmt='json')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual((data['squares'], data['imbalance3'], data['I']), (576, 16, '16/3'))


class TestSearchCommand(CliTestCase):

    def test_identical_seeds_give_identical_certificates(self):
        first, second = str(self.tmp / 'a.json'), str(self.tmp / 'b.json')
        self.assertEqual(run(cmd_search, 13, seed=5, output=first)[0], EXIT_OK)
        self.assertEqual(run(cmd_search, 13, seed=5, output=second)[0], EXIT_OK)
        self.assertEqual(Path(first).read_bytes(), Path(second).read_bytes())

    def test_certificate_verifies(self):
        path = str(self.tmp / 'cert.json')
        run(cmd_search, 10, seed=1, output=path)
        code, out, _ = run(cmd_verify, path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('PASS', out)

    def test_tampered_certificate_fails(self):
        path = str(self.tmp / 'cert.json')
        run(cmd_search, 7, seed=2, output=path)
        data = json.loads(Path(path).read_text())
        data['imbalance3'] += 3
        Path(path).write_text(json.dumps(data))
        code, out, _ = run(cmd_verify, path)
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('mismatch imbalance3', out)

    def test_generated_seed_is_printed(self):
        code, _, err = run(cmd_search, 4)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('seed = ', err)

    def test_wrong_residue(self):
        self.assertEqual(run(cmd_search, 6, seed=1)[0], EXIT_VALIDATION)

    def test_search_failure(self):
        code, out, _ = run(cmd_search, 52, seed=1, fmt='json', initial_temperature=0.5, reheat_temperature=0.5,
                           steps_per_temperature=1, stagnation_window=1, restart_limit=1)
        self.assertEqual(code, EXIT_FAILURE)
        data = json.loads(out)
        self.assertEqual(data['reason'], 'restart-limit')
        self.assertEqual(data['restart_count'], 1)

    def test_search_time_limit(self):
        code, out, _ = run(cmd_search, 52, seed=1, time_limit=1e-9)
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('time-limit', out)


class TestTableAndVerify(CliTestCase):

    def test_table_writes_manifest(self):
        path = str(self.tmp / 'table.csv')
        code, out, _ = run(cmd_table, 10, budget=60, csv_path=path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([line.split(',')[:2] for line in Path(path).read_text().splitlines()],
                         [['n', 'I_star'], ['4', '16/3'], ['7', '56/3'], ['10', '40']])
        self.assertIn('3/3 rows verified', out)

    def test_empty_table(self):
        self.assertEqual(run(cmd_table, 3, budget=1)[0], EXIT_OK)

    def test_table_guard(self):
        self.assertEqual(run(cmd_table, 55, budget=1)[0], EXIT_VALIDATION)

    def test_verify_square_bound_walk(self):
        path = self.write('four.txt', "0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n")
        code, out, _ = run(cmd_verify, path, verbose=True)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('rows 0,1', out)

    def test_verify_square_other_residue(self):
        path = self.write('three.txt', "0 1 2\n1 2 0\n2 0 1\n")
        code, out, _ = run(cmd_verify, path, fmt='json')
        self.assertEqual(code, EXIT_OK)
        self.assertNotIn('bound', json.loads(out))

    def test_verify_unparseable(self):
        self.assertEqual(run(cmd_verify, self.write('bad.json', '{"format_version": 1'))[0], EXIT_PARSE)


class TestExtraCommands(CliTestCase):

    def test_family(self):
        path = str(self.tmp / 'family.csv')
        code, out, _ = run(cmd_family, 'power', 4, 8, exponent=3, csv_path=path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('power3 n=5: imbalance3=0', out)
        self.assertTrue(Path(path).read_text().startswith('n,imbalance3,I\n'))

    def test_family_json(self):
        code, out, _ = run(cmd_family, 'power', 5, 5, exponent=3, fmt='json')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['family'], 'power3')
        self.assertEqual(data['rows'], [{'n': 5, 'imbalance3': 0, 'lower_bound3': 0, 'I': '0'}])

    def test_falsify(self):
        code, out, _ = run(cmd_falsify, 7, 10, seed=3, fmt='json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['violations'], 0)

    def test_falsify_text(self):
        code, out, _ = run(cmd_falsify, 7, 10, seed=3)
        self.assertEqual(code, EXIT_OK)
        self.assertIn('bound = 56 (I = 56/3)', out)
        self.assertIn('no square below the bound', out)

    def test_format_flag_on_family_and_falsify(self):
        with mock.patch.object(main, 'LOG_FILE', ''):
            code, out, _ = run(main.main_cli, ['--log-level', 'ERROR', 'falsify', '--n', '4', '--samples', '4',
                                               '--seed', '1', '--format', 'json'])
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(json.loads(out)['lower_bound3'], 16)
            code, out, _ = run(main.main_cli, ['--log-level', 'ERROR', 'family', '--n-min', '5', '--n-max', '5',
                                               '--format', 'json'])
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(json.loads(out)['rows'][0]['n'], 5)


class TestMainCli(CliTestCase):

    def test_dispatch(self):
        path = self.write('cyclic.txt', "0 1 2\n1 2 0\n2 0 1\n")
        with mock.patch.object(main, 'LOG_FILE', ''):
            code, out, _ = run(main.main_cli, ['--log-level', 'WARNING', 'imbalance', path, '--format', 'json'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['imbalance3'], 0)

    def test_search_flags(self):
        path = str(self.tmp / 'cert.json')
        with mock.patch.object(main, 'LOG_FILE', ''):
            code, _, _ = run(main.main_cli, ['--log-level', 'ERROR', 'search', '--n', '7', '--seed', '3',
                                             '--cooling', '0.99', '--objective', 'imbalance', '--output', path])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(Path(path).read_text())['objective'], 'imbalance')


if __name__ == '__main__':
    unittest.main()
