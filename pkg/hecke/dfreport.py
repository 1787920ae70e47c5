"""
Deformation checks over Z[[t]] with q = 1 + t.

For every prime p <= n and every 2 <= i <= n the q-number i_{q^2} is expanded
at q = 1 + t, reduced mod p and its t-adic valuation read off: a finite
valuation means i_{q^2} stays invertible in F_p((t)), so inverting n_{q^2}!
inverts no rational prime. Two more checks confirm that H_n at t = 0 is the
group ring of S_n and that H_n acts faithfully on V^n when d = n.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import pandas as pd
from django.conf import settings
from sympy import isprime, primerange
from sympy.polys.matrices import DomainMatrix

from .exceptions import HeckeError, PrecisionExhausted
from .qarith import GENERIC, Scalars, qnum, substitute_series
from .symgroup import (
    GroupAlgebraElement, HeckeElement, Permutation, all_permutations, hecke_multiply, specialize_q1,
)
from .tensorrep import hecke_element_operator, hecke_operator
from .tensorspace import Ambient, TensorVector, rank, words_of_degree

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['prime', 'i', 'valuation', 'leading_coeff']


@dataclass(frozen=True)
class ValuationRow:
    prime: int
    i: int
    valuation: int | None
    leading_coeff: int | None

    @property
    def finite(self):
        return self.valuation is not None


@dataclass(frozen=True)
class ValuationReport:
    n: int
    rows: tuple

    @property
    def no_rational_prime_in_s(self):
        """Every i_{(1+t)^2} mod p has a finite valuation."""
        return all(row.finite for row in self.rows)

    def to_records(self):
        return [asdict(row) for row in self.rows]

    def to_frame(self):
        return pd.DataFrame(
            [[row.prime, row.i, row.valuation, row.leading_coeff] for row in self.rows],
            columns=CSV_COLUMNS,
        ).astype({'valuation': 'Int64', 'leading_coeff': 'Int64'})

    def to_csv(self):
        body = self.to_frame().to_csv(index=False, lineterminator='\n')
        return body + f'no_rational_prime_in_S: {str(self.no_rational_prime_in_s).lower()}\n'


def valuation_row(i, p, precision=None):
    """
    (valuation, leading coefficient) of i_{(1+t)^2} mod p.

    The truncation starts at 4i terms and doubles while it is identically
    zero; reaching 2ip terms without a nonzero coefficient raises.
    """
    if i < 2:
        raise HeckeError(f'valuations are reported for i >= 2, got {i}')
    if not isprime(p):
        raise HeckeError(f'{p} is not prime')
    cap = 2 * i * p
    precision = min(precision or 4 * i, cap)
    while True:
        series = substitute_series(qnum(i), p, precision)
        if series.valuation is not None:
            logger.debug(f'i={i} p={p}: {series} (precision {precision})')
            return series.valuation, series.leading_coefficient
        if precision >= cap:
            raise PrecisionExhausted(f'i_(1+t)^2 with i={i} vanishes mod {p} up to t^{precision}')
        precision = min(2 * precision, cap)


def default_primes(n):
    return list(primerange(2, n + 1))


def _row(i, p):
    try:
        valuation, coeff = valuation_row(i, p)
    except PrecisionExhausted:
        logger.warning(f'no finite valuation found for i={i} p={p}')
        return ValuationRow(p, i, None, None)
    return ValuationRow(p, i, valuation, coeff)


def valuation_report(n, primes=None):
    """Rows ordered by prime, then i."""
    if not 2 <= n <= settings.HECKE_DF_MAX_N:
        raise HeckeError(f'df reports cover 2 <= n <= {settings.HECKE_DF_MAX_N}, got {n}')
    primes = sorted(set(primes or default_primes(n)))
    for p in primes:
        if not isprime(p):
            raise HeckeError(f'{p} is not prime')
    jobs = [(i, p) for p in primes for i in range(2, n + 1)]
    with ThreadPoolExecutor(max_workers=settings.HECKE_WORKERS) as pool:
        rows = tuple(pool.map(lambda job: _row(*job), jobs))
    logger.info(f'valuation report for n={n}, primes {primes}: {len(rows)} rows')
    return ValuationReport(n, rows)


def deformation_fiber_check(n):
    """The T-basis multiplication table of H_n at q = 1 is the multiplication table of S_n."""
    perms = all_permutations(n)
    for u in perms:
        for v in perms:
            product = specialize_q1(hecke_multiply(HeckeElement.basis(u), HeckeElement.basis(v)))
            if product != GroupAlgebraElement.basis(u * v):
                logger.warning(f'T{u} T{v} at q = 1 is {product}, expected {u * v}')
                return False
    logger.info(f'deformation fiber check passed for n={n}')
    return True


def _pairs(n, rng, samples):
    generators = [Permutation.simple(n, i) for i in range(1, n)]
    perms = all_permutations(n)
    pairs = [(s, t) for s in generators for t in generators]
    pairs.extend((rng.choice(perms), rng.choice(perms)) for _ in range(samples))
    return pairs


def faithfulness_check(n, q0=None, samples=20, seed=0):
    """
    Products in H_n agree with composed operators on the regular part of V^n
    (d = n, words using every letter once), and the T_w are linearly
    independent operators at q = q0.
    """
    if n < 2:
        raise HeckeError(f'faithfulness is checked for n >= 2, got {n}')
    ambient = Ambient(n, n, GENERIC)
    regular = words_of_degree((1,) * n)
    rng = random.Random(seed)
    for u, v in _pairs(n, rng, samples):
        product = hecke_element_operator(ambient, hecke_multiply(HeckeElement.basis(u), HeckeElement.basis(v)))
        composed = hecke_operator(ambient, u) @ hecke_operator(ambient, v)
        for word in regular:
            vector = TensorVector.basis_word(ambient, word)
            if product(vector) != composed(vector):
                logger.warning(f'T{u} T{v} disagrees with the composed operators on {word}')
                return False

    scalars = Scalars(q0 if q0 is not None else settings.HECKE_SEEDS[0])
    point = Ambient(n, n, scalars)
    start = TensorVector.basis_word(point, tuple(range(1, n + 1)))
    rows = [
        [scalars.to_domain(hecke_operator(point, w)(start).coefficient(word)) for word in regular]
        for w in all_permutations(n)
    ]
    independent = rank(DomainMatrix(rows, (len(rows), len(regular)), scalars.domain)) == len(rows)
    if not independent:
        logger.warning(f'the T_w are dependent on V^{n} at q = {scalars}')
    return independent
