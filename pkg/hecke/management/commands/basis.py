"""
Print the canonical orthogonal basis of V(p;0) with its norms.

Usage:
    python manage.py basis --n 3 --partition 2,1 --q 1
    python manage.py basis --n 2 --partition 1,1

Without --partition every partition of n into at most d parts is printed.
"""
import pandas as pd

from hecke.canonbasis import all_unit, all_unit_classical, build_all, build_basis, hook_length_count
from hecke.management.base import HeckeCommand
from hecke.tensorrep import raising
from hecke.tensorspace import inner_product


def all_units(p, config):
    if config.scalars.classical:
        return all_unit_classical(p, config.n)
    return all_unit(p, config.n)


def basis_payload(p, basis, config):
    scalars = config.scalars
    return {
        'partition': list(p.parts),
        'tableaux': [tableau.to_json() for tableau, _ in basis],
        'vectors': [v.to_json() for _, v in basis],
        'norms': [scalars.format(inner_product(v, v)) for _, v in basis],
        'all_units': all_units(p, config),
    }


def basis_failures(p, basis, payload):
    """Kernel property, orthogonality, size and unit norms of one basis."""
    failures = []
    vectors = [v for _, v in basis]
    for v in vectors:
        if any(raising(v.ambient, i)(v) for i in range(1, p.d)):
            failures.append('kernel')
    for k, u in enumerate(vectors):
        if any(inner_product(u, v) for v in vectors[k + 1:]):
            failures.append('orthogonality')
    if len(vectors) != hook_length_count(p.shape):
        failures.append('size')
    if not payload['all_units']:
        failures.append('units')
    return failures


class Command(HeckeCommand):
    help = 'Build the canonical orthogonal basis of V(p;0) and print it with its norms'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_d_argument(parser)
        self.add_q_argument(parser)
        parser.add_argument('--partition', help='Partition such as 2,1 (default: all partitions of n)')

    def run(self, config, options):
        if config.partition is not None:
            bases = {config.partition: build_basis(config.partition, config.scalars)}
        else:
            bases = build_all(config.n, config.d, config.scalars)

        payloads, failures = [], 0
        for p, basis in bases.items():
            payload = basis_payload(p, basis, config)
            failed = basis_failures(p, basis, payload)
            if failed:
                self.stderr.write(self.style.ERROR(f'V({p};0): {", ".join(sorted(set(failed)))} failed'))
            failures += len(failed)
            payloads.append((p, basis, payload))

        if config.output_format == 'json':
            body = [payload for _, _, payload in payloads]
            self.write_json(body[0] if config.partition is not None else body)
        elif config.output_format == 'csv':
            rows = [
                [str(p), str(tableau), ''.join(map(str, word)), config.scalars.format(coeff)]
                for p, basis, _ in payloads
                for tableau, v in basis
                for word, coeff in v.items()
            ]
            self.write_csv(pd.DataFrame(rows, columns=['partition', 'tableau', 'word', 'coeff']))
        else:
            for p, basis, payload in payloads:
                self.stdout.write(f'V({p};0) over {config.scalars}: {len(basis)} vector(s), all units: {payload["all_units"]}')
                for (tableau, v), norm in zip(basis, payload['norms']):
                    self.stdout.write(f'  {tableau}: {v}')
                    self.stdout.write(f'    norm {norm}')
        return failures
