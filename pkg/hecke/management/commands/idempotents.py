"""
Central, canonical and Frobenius-Young idempotents of Q S_n.

Usage:
    python manage.py idempotents --n 3

Each idempotent is printed as a list of {"perm": one-line, "coeff": "a/b"}
sorted by permutation, followed by the identities checked on them.
"""
from functools import reduce

import pandas as pd
from sympy import primefactors

from hecke.idempotents import (
    all_tableaux, canonical_idempotent, central_idempotent, frobenius_young_idempotent,
    inductive_canonical_idempotent, is_central, rep_table,
)
from hecke.management.base import HeckeCommand
from hecke.symgroup import GroupAlgebraElement

PAIRWISE_LIMIT = 4


def _sum(elements, n):
    return reduce(lambda a, b: a + b, elements, GroupAlgebraElement(n))


def _small_primes(element, n):
    return all(max(primefactors(c.denominator), default=1) <= n for c in element.terms.values())


def idempotent_checks(n):
    """Name -> passed for the identities the idempotents must satisfy."""
    table = rep_table(n)
    one = GroupAlgebraElement.identity(n)
    central = {p: central_idempotent(p, n) for p in table.shapes}
    canonical = [(p, t, canonical_idempotent(t, n)) for p, t in all_tableaux(n)]
    young = {t: frobenius_young_idempotent(t, n) for _, t, _ in canonical}
    checks = {
        'central idempotents are idempotent': all(e * e == e for e in central.values()),
        'central idempotents are central': all(is_central(e) for e in central.values()),
        'central idempotents sum to 1': _sum(central.values(), n) == one,
        'canonical idempotents sum to 1': _sum([e for _, _, e in canonical], n) == one,
        'canonical idempotents add up to the central ones': all(
            _sum([e for q, _, e in canonical if q == p], n) == central[p] for p in table.shapes
        ),
        'canonical denominators only involve primes <= n': all(_small_primes(e, n) for _, _, e in canonical),
        'inductive canonical idempotents match': all(
            inductive_canonical_idempotent(t) == e for _, t, e in canonical
        ),
        'Frobenius-Young idempotents are idempotent': all(f * f == f for f in young.values()),
    }
    if n >= 3:
        checks['canonical idempotents differ from the Frobenius-Young ones'] = any(
            e != young[t] for _, t, e in canonical
        )
    if n <= PAIRWISE_LIMIT:
        checks['canonical idempotents are orthogonal idempotents'] = all(
            (a * b == a) if k == m else not (a * b)
            for k, (_, _, a) in enumerate(canonical)
            for m, (_, _, b) in enumerate(canonical)
        )
    return checks


class Command(HeckeCommand):
    help = 'Compute the central, canonical and Frobenius-Young idempotents of Q S_n'

    def run(self, config, options):
        n = config.n
        table = rep_table(n)
        payload = {
            'n': n,
            'central': [
                {'partition': list(p.shape), 'element': central_idempotent(p, n).to_json()}
                for p in table.shapes
            ],
            'canonical': [
                {'tableau': t.to_json(), 'element': canonical_idempotent(t, n).to_json()}
                for _, t in all_tableaux(n)
            ],
            'frobenius_young': [
                {'tableau': t.to_json(), 'element': frobenius_young_idempotent(t, n).to_json()}
                for _, t in all_tableaux(n)
            ],
        }
        checks = idempotent_checks(n)
        payload['checks'] = checks
        failures = sum(not passed for passed in checks.values())

        if config.output_format == 'json':
            self.write_json(payload)
        elif config.output_format == 'csv':
            rows = [
                [section, str(entry.get('partition') or entry.get('tableau')), term['perm'], term['coeff']]
                for section in ('central', 'canonical', 'frobenius_young')
                for entry in payload[section]
                for term in entry['element']
            ]
            self.write_csv(pd.DataFrame(rows, columns=['kind', 'label', 'perm', 'coeff']))
        else:
            for section in ('central', 'canonical', 'frobenius_young'):
                self.stdout.write(f'{section}:')
                for entry in payload[section]:
                    label = entry.get('partition') or entry.get('tableau')
                    terms = ' + '.join(f'({term["coeff"]}){term["perm"]}' for term in entry['element'])
                    self.stdout.write(f'  {label}: {terms}')
            for name, passed in checks.items():
                self.stdout.write(self.style.SUCCESS(f'PASS {name}') if passed else self.style.ERROR(f'FAIL {name}'))
        return failures
