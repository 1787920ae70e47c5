"""
t-adic valuations of i_{(1+t)^2} mod p, one row per prime p and index i.

Usage:
    python manage.py df --n 4
    python manage.py df --n 7 --primes 2,3
    python manage.py df --n 3 --checks

Prints CSV `prime,i,valuation,leading_coeff` and a final summary line
`no_rational_prime_in_S: true|false`. --checks also confirms that H_n at t = 0
is Z S_n and that it acts faithfully on V^n.
"""
from django.conf import settings

from hecke.dfreport import deformation_fiber_check, faithfulness_check, valuation_report
from hecke.management.base import HeckeCommand

CHECK_LIMIT = 4


class Command(HeckeCommand):
    help = 'Report the t-adic valuations behind the Donald-Flanigan deformation'
    default_format = 'csv'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--primes', help='Comma-separated primes (default: all primes <= n)')
        parser.add_argument(
            '--checks',
            action='store_true',
            help=f'Also run the deformation-fiber and faithfulness checks (n <= {CHECK_LIMIT})',
        )
        parser.add_argument('--seeds', help='Rational point for the faithfulness rank check')

    def max_n(self):
        return settings.HECKE_DF_MAX_N

    def run(self, config, options):
        report = valuation_report(config.n, list(config.primes) or None)
        failures = 0 if report.no_rational_prime_in_s else 1

        checks = {}
        if options.get('checks'):
            if config.n > CHECK_LIMIT:
                self.stderr.write(f'--checks is limited to n <= {CHECK_LIMIT}; skipped')
            else:
                checks['deformation_fiber'] = deformation_fiber_check(config.n)
                checks['faithful'] = faithfulness_check(config.n, config.seeds[0])
                failures += sum(not passed for passed in checks.values())

        if config.output_format == 'json':
            self.write_json({
                'n': config.n,
                'rows': report.to_records(),
                'no_rational_prime_in_S': report.no_rational_prime_in_s,
                **checks,
            })
        elif config.output_format == 'text':
            for row in report.rows:
                self.stdout.write(f'p={row.prime} i={row.i}: valuation {row.valuation}, leading coefficient {row.leading_coeff}')
            self.stdout.write(f'no rational prime in S: {report.no_rational_prime_in_s}')
            for name, passed in checks.items():
                self.stdout.write(f'{name}: {passed}')
        else:
            self.stdout.write(report.to_csv(), ending='')
            for name, passed in checks.items():
                self.stdout.write(f'{name}: {str(passed).lower()}')
        return failures
