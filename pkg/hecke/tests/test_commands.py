import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


def run(*args, **options):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue()


class BasisCommandTests(SimpleTestCase):
    def test_classical_two_one(self):
        payload = json.loads(run('basis', n=3, d=2, partition='2,1', q='1'))
        self.assertEqual(payload['partition'], [2, 1])
        self.assertEqual(payload['tableaux'], [[[1, 2], [3]], [[1, 3], [2]]])
        self.assertEqual(payload['vectors'][0], [
            {'word': [1, 1, 2], 'coeff': '-1/2'},
            {'word': [1, 2, 1], 'coeff': '-1/2'},
            {'word': [2, 1, 1], 'coeff': '1'},
        ])
        self.assertEqual(payload['vectors'][1], [
            {'word': [1, 1, 2], 'coeff': '-1'},
            {'word': [1, 2, 1], 'coeff': '1'},
        ])
        self.assertEqual(payload['norms'], ['3/2', '2'])
        self.assertTrue(payload['all_units'])

    def test_symbolic_one_one(self):
        payload = json.loads(run('basis', n=2, d=2, partition='1,1'))
        self.assertEqual(payload['vectors'], [[
            {'word': [1, 2], 'coeff': '-1*q^-1'},
            {'word': [2, 1], 'coeff': '1*q^0'},
        ]])
        self.assertTrue(payload['all_units'])

    def test_every_partition(self):
        payload = json.loads(run('basis', n=3, d=2))
        self.assertEqual([entry['partition'] for entry in payload], [[3, 0], [2, 1]])
        self.assertEqual([len(entry['vectors']) for entry in payload], [1, 2])

    def test_csv(self):
        lines = run('basis', n=2, d=2, partition='1,1', q='2', output_format='csv').splitlines()
        self.assertEqual(lines, ['partition,tableau,word,coeff', '"1,1","[[1],[2]]",12,-1/2', '"1,1","[[1],[2]]",21,1'])

    def test_text(self):
        out = run('basis', n=2, d=2, partition='2', q='1', output_format='text')
        self.assertIn('V(2;0) over 1: 1 vector(s), all units: True', out)

    def test_deterministic(self):
        first = run('basis', n=4, d=3)
        self.assertEqual(run('basis', n=4, d=3), first)


class UsageErrorTests(SimpleTestCase):
    def assertUsageError(self, *args, **options):
        with self.assertRaises(CommandError) as cm:
            run(*args, **options)
        self.assertEqual(cm.exception.returncode, 2)
        return str(cm.exception)

    def test_n_above_limit(self):
        self.assertIn('n = 9', self.assertUsageError('basis', n=9))

    def test_partition_of_another_n(self):
        self.assertIn('partition', self.assertUsageError('basis', n=3, partition='2,2'))

    def test_forbidden_q(self):
        self.assertUsageError('basis', n=2, q='0')
        self.assertUsageError('basis', n=2, q='-1')
        self.assertUsageError('basis', n=2, q='half')

    def test_bad_seeds(self):
        self.assertUsageError('verify', 'norms', seeds='1,2')

    def test_df_limit(self):
        self.assertUsageError('df', n=8)

    def test_unknown_suite(self):
        with self.assertRaises(CommandError):
            run('verify', 'associativity')


class VerifyCommandTests(SimpleTestCase):
    def test_text_report(self):
        out = run('verify', 'braid')
        self.assertIn('PASS braid: R1R2R1 = R2R1R2', out)
        self.assertIn('checks passed', out)

    def test_json_report(self):
        payload = json.loads(run('verify', 'hecke', n=3, d=2, output_format='json'))
        self.assertEqual(payload['suite'], 'hecke')
        self.assertTrue(payload['passed'])
        self.assertTrue(all(check['passed'] for check in payload['checks']))

    def test_csv_report(self):
        lines = run('verify', 'rotation', t='0.1', output_format='csv').splitlines()
        self.assertEqual(lines[0], 'suite,name,passed,detail')
        self.assertEqual(len(lines), 2)


class DfCommandTests(SimpleTestCase):
    def test_csv_for_three(self):
        self.assertEqual(run('df', n=3), (
            'prime,i,valuation,leading_coeff\n'
            '2,2,2,1\n'
            '2,3,0,1\n'
            '3,2,0,2\n'
            '3,3,2,1\n'
            'no_rational_prime_in_S: true\n'
        ))

    def test_checks(self):
        lines = run('df', n=3, checks=True).splitlines()
        self.assertEqual(lines[-2:], ['deformation_fiber: true', 'faithful: true'])

    def test_json(self):
        payload = json.loads(run('df', n=4, primes='2', output_format='json'))
        self.assertEqual(payload['rows'][-1], {'prime': 2, 'i': 4, 'valuation': 6, 'leading_coeff': 1})
        self.assertTrue(payload['no_rational_prime_in_S'])

    def test_bad_prime(self):
        with self.assertLogs('hecke.management.base', 'ERROR'):
            with self.assertRaises(CommandError) as cm:
                run('df', n=4, primes='4')
        self.assertEqual(cm.exception.returncode, 1)


class IdempotentsCommandTests(SimpleTestCase):
    def test_json_for_three(self):
        payload = json.loads(run('idempotents', n=3))
        self.assertEqual(payload['central'][1], {
            'partition': [2, 1],
            'element': [
                {'perm': '[1,2,3]', 'coeff': '2/3'},
                {'perm': '[2,3,1]', 'coeff': '-1/3'},
                {'perm': '[3,1,2]', 'coeff': '-1/3'},
            ],
        })
        self.assertEqual([entry['tableau'] for entry in payload['canonical']], [
            [[1, 2, 3]], [[1, 2], [3]], [[1, 3], [2]], [[1], [2], [3]],
        ])
        self.assertTrue(all(payload['checks'].values()))
        self.assertIn('canonical idempotents differ from the Frobenius-Young ones', payload['checks'])

    def test_text(self):
        out = run('idempotents', n=2, output_format='text')
        self.assertIn('PASS central idempotents sum to 1', out)
        self.assertNotIn('differ', out)
