import csv
import io
import json
import os
import unittest
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from unittest.mock import patch
from urllib.error import URLError

from SMotzkin.cli import ExitCode, cmd_crosscheck, cmd_series, cmd_table, format_report, render_table
from SMotzkin.config import get_config
from SMotzkin.crosscheck import CHECKS, CheckPlan, run_crosscheck
from SMotzkin.main import main
from SMotzkin.oeis import cache_path
from SMotzkin.paths import FamilyTag, OracleBoundError
from SMotzkin.recurrences import family_tables, smotzkin_count

sys.path.insert(0, '..')


class TestOutput(unittest.TestCase):

    def test_01_table_csv(self):
        out = io.StringIO()
        self.assertEqual(cmd_table('b', 4, 'csv', out), ExitCode.OK)
        self.assertEqual(out.getvalue(), 'n,k,count\n1,0,1\n3,1,1\n4,0,2\n')

    def test_02_table_json(self):
        out = io.StringIO()
        cmd_table('a', 3, 'json', out)
        self.assertEqual(json.loads(out.getvalue()), [{'n': 0, 'k': 0, 'count': '1'},
                                                      {'n': 2, 'k': 1, 'count': '1'},
                                                      {'n': 3, 'k': 0, 'count': '1'}])

    def test_03_unknown_family(self):
        with redirect_stderr(io.StringIO()):
            self.assertEqual(cmd_table('x', 3, 'csv', io.StringIO()), ExitCode.USAGE)

    def test_04_series(self):
        out = io.StringIO()
        cmd_series('f', 0, 6, 'csv', out)
        self.assertEqual(out.getvalue(), 'exponent,coefficient\n0,1\n3,1\n6,3\n')
        out = io.StringIO()
        cmd_series('t', 0, 3, 'json', out)
        self.assertEqual([term['coefficient'] for term in json.loads(out.getvalue())], ['1', '2', '7'])

    def test_05_report(self):
        results = [('one', {'res': True, 'msg': '', 'compared': 3}),
                   ('two', {'res': False, 'msg': 'broken', 'compared': 1})]
        report = format_report(results, colored=False)
        lines = report.splitlines()
        self.assertTrue(lines[0].startswith('PASS'))
        self.assertTrue(lines[1].startswith('FAIL'))
        self.assertIn('broken', lines[1])
        self.assertEqual(lines[-1], '1 of 2 groups passed')
        self.assertIn('\x1b[', format_report(results, colored=True))

    def test_06_csv_json_agree(self):
        table = family_tables(30)[FamilyTag.C]
        rows = list(csv.reader(io.StringIO(render_table(table, 'csv'))))
        self.assertEqual(rows[0], ['n', 'k', 'count'])
        from_csv = sorted((int(n), int(k), int(count)) for n, k, count in rows[1:])
        from_json = sorted((e['n'], e['k'], int(e['count'])) for e in json.loads(render_table(table, 'json')))
        self.assertEqual(from_csv, from_json)
        self.assertEqual(len(from_csv), len(table.nonzero_entries()))


class TestCrosscheck(unittest.TestCase):

    def test_01_smallest_plan(self):
        results = run_crosscheck(CheckPlan.build(0))
        self.assertEqual([name for name, _res in results], [name for name, _check in CHECKS])
        self.assertTrue(all(res['res'] for _name, res in results), results)

    def test_02_small_plan(self):
        results = run_crosscheck(CheckPlan.build(12, oracle_bound=8), jobs=3)
        self.assertTrue(all(res['res'] for _name, res in results), results)
        cramer = dict(results)['cramer-stabilization']
        self.assertIn('h0', cramer['msg'])

    def test_03_fault_injection(self):
        plan = CheckPlan.build(12, oracle_bound=6, fault=(3, 0))
        out, err = io.StringIO(), io.StringIO()
        with redirect_stderr(err):
            self.assertEqual(cmd_crosscheck(plan, out=out), ExitCode.FAILURE)
        self.assertIn('a(3, 0)', out.getvalue())
        self.assertIn('oracle-vs-dp', err.getvalue())

    def test_04_plan_bounds(self):
        with self.assertRaises(OracleBoundError):
            CheckPlan.build(12, oracle_bound=17)
        with self.assertRaises(ValueError):
            CheckPlan.build(4, fault=(9, 0))
        with self.assertRaises(ValueError):
            CheckPlan.build(-1)
        plan = CheckPlan.build(5, oracle_bound=9)
        self.assertEqual(plan.oracle_bound, 5)
        self.assertEqual(plan.closed_n_max, 10)

    def test_05_jobs_deterministic(self):
        plan = CheckPlan.build(8, oracle_bound=6)
        serial = run_crosscheck(plan, jobs=1)
        threaded = run_crosscheck(plan, jobs=3)
        self.assertEqual(threaded, serial)
        self.assertEqual(format_report(threaded, colored=False), format_report(serial, colored=False))

    def test_06_default_oracle_bound(self):
        self.assertEqual(get_config().ORACLE_BOUND, 14)
        self.assertEqual(CheckPlan.build(20).oracle_bound, 14)


class TestMain(unittest.TestCase):

    def run_main(self, argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
        return code, out.getvalue(), err.getvalue()

    def test_01_table(self):
        code, out, _err = self.run_main(['table', '--family', 'd', '--n-max', '3'])
        self.assertEqual(code, 0)
        self.assertEqual(out, 'n,k,count\n2,0,1\n3,1,2\n')

    def test_02_usage_errors(self):
        self.assertEqual(self.run_main(['table', '--n-max', '-1'])[0], ExitCode.USAGE)
        self.assertEqual(self.run_main(['crosscheck', '--oracle-bound', '17'])[0], ExitCode.USAGE)
        with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit):
            main(['crosscheck', '--inject-fault', 'x'])

    def test_03_fault(self):
        code, out, _err = self.run_main(['crosscheck', '--n-max', '4', '--oracle-bound', '4',
                                         '--inject-fault', '3,0', '--no-color'])
        self.assertEqual(code, ExitCode.FAILURE)
        self.assertIn('groups passed', out)

    def test_04_oeis_diff(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, _out, _err = self.run_main(['oeis-diff', '--cache-dir', tmp])
            self.assertEqual(code, ExitCode.CACHE_MISS)
            path = cache_path('A001764', tmp)
            with open(path, 'w') as f:
                f.write('0 1\n1 1\n2\n')
            self.assertEqual(self.run_main(['oeis-diff', '--cache-dir', tmp])[0], ExitCode.PARSE)
            with open(path, 'w') as f:
                f.write(''.join(f'{m} {smotzkin_count(m)}\n' for m in range(21)))
            code, out, _err = self.run_main(['oeis-diff', '--cache-dir', tmp])
            self.assertEqual(code, ExitCode.OK)
            self.assertTrue(out.startswith('A001764'))
            self.assertEqual(self.run_main(['oeis-diff', '--cache-dir', tmp, '--n-max', '25'])[0],
                             ExitCode.FAILURE)
            self.assertTrue(os.path.exists(path))

    def test_05_undecodable_bfile(self):
        with tempfile.TemporaryDirectory() as tmp:
            with open(cache_path('A001764', tmp), 'wb') as f:
                f.write(b'0 1\n1 \xff\xfe\n')
            code, _out, err = self.run_main(['oeis-diff', '--cache-dir', tmp])
            self.assertEqual(code, ExitCode.PARSE)
            self.assertIn('line 2', err)

    def test_06_fetch_failure(self):
        with tempfile.TemporaryDirectory() as tmp, patch('SMotzkin.oeis.urlopen') as urlopen:
            urlopen.side_effect = URLError('down')
            code, _out, err = self.run_main(['oeis-diff', '--cache-dir', tmp, '--allow-fetch'])
            self.assertEqual(code, ExitCode.CACHE_MISS)
            self.assertIn('down', err)
            path = cache_path('A001764', tmp)
            self.assertFalse(os.path.exists(path))
            self.assertFalse(os.path.exists(path + '.part'))
