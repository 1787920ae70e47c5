"""
Shared plumbing for the hecke management commands.

Options are validated by RunConfigForm; invalid options end the command with
exit status 2, domain errors and failed checks with exit status 1.
"""
import json
import logging

from django.core.management.base import BaseCommand, CommandError

from ..exceptions import HeckeError
from ..forms import RunConfigForm

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
CHECK_FAILED = 1


class HeckeCommand(BaseCommand):
    default_format = 'json'
    default_n = None

    def add_arguments(self, parser):
        parser.add_argument(
            '--n',
            type=int,
            default=self.default_n,
            required=self.default_n is None,
            help='Number of tensor factors / degree of the symmetric group',
        )
        parser.add_argument(
            '--format',
            dest='output_format',
            choices=['json', 'csv', 'text'],
            default=self.default_format,
            help=f'Output format (default: {self.default_format})',
        )

    def add_d_argument(self, parser):
        parser.add_argument('--d', type=int, help='Alphabet size (default: n)')

    def add_q_argument(self, parser):
        parser.add_argument(
            '--q',
            default='symbolic',
            help='"symbolic" for Q(q), 1 for the classical case, or a nonzero rational other than -1',
        )

    def max_n(self):
        return None

    def build_config(self, options):
        data = {
            'n': options.get('n'),
            'd': options.get('d'),
            'partition': options.get('partition'),
            'q': options.get('q'),
            'output_format': options.get('output_format'),
            'seeds': options.get('seeds'),
            't': options.get('t'),
            'primes': options.get('primes'),
            'verbosity': options.get('verbosity'),
        }
        form = RunConfigForm(data=data, max_n=self.max_n(), default_format=self.default_format)
        if not form.is_valid():
            messages = '; '.join(f'{field}: {" ".join(errors)}' for field, errors in form.errors.items())
            raise CommandError(f'Invalid options: {messages}', returncode=USAGE_ERROR)
        return form.to_config()

    def handle(self, *args, **options):
        config = self.build_config(options)
        try:
            failures = self.run(config, options)
        except HeckeError as exc:
            logger.error(f'{type(exc).__name__}: {exc}')
            raise CommandError(str(exc), returncode=CHECK_FAILED) from exc
        if failures:
            raise CommandError(f'{failures} check(s) failed', returncode=CHECK_FAILED)

    def run(self, config, options):
        """Write the output; return the number of failed checks."""
        raise NotImplementedError

    def write_json(self, payload):
        self.stdout.write(json.dumps(payload, indent=2))

    def write_csv(self, frame):
        self.stdout.write(frame.to_csv(index=False, lineterminator='\n'), ending='')
