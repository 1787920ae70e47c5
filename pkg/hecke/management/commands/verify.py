"""
Run one verification suite and report every identity it checked.

Usage:
    python manage.py verify braid --n 4 --d 3
    python manage.py verify rotation --t 0.1,0.25
    python manage.py verify norms --n 5

Exit status is 0 only if every check passed.
"""
from hecke.management.base import HeckeCommand
from hecke.verification import SUITES, results_frame, run_suite


class Command(HeckeCommand):
    help = 'Run a verification suite (braid, hecke, commutant, ...) and report each identity'
    default_format = 'text'
    default_n = 3

    def add_arguments(self, parser):
        parser.add_argument('suite', choices=sorted(SUITES), help='Suite to run')
        super().add_arguments(parser)
        self.add_d_argument(parser)
        self.add_q_argument(parser)
        parser.add_argument('--partition', help='Restrict partition-wise suites to one partition')
        parser.add_argument('--seeds', help='Rational evaluation points, e.g. 2,3,5')
        parser.add_argument('--t', help='Angles for the rotation suite (default: 0.1,0.25)')

    def run(self, config, options):
        results = run_suite(options['suite'], config)
        failed = [r for r in results if not r.passed]

        if config.output_format == 'json':
            self.write_json({
                'suite': options['suite'],
                'passed': not failed,
                'checks': [r.to_json() for r in results],
            })
        elif config.output_format == 'csv':
            self.write_csv(results_frame(results))
        else:
            for r in results:
                self.stdout.write(self.style.SUCCESS(str(r)) if r.passed else self.style.ERROR(str(r)))
            self.stdout.write(f'{len(results) - len(failed)}/{len(results)} checks passed')
        return len(failed)
