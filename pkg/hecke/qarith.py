"""
Exact arithmetic in Q(q).

Every coefficient in this app is either an element of the rational function
field Q(q) (sympy keeps those reduced for us) or, once q has been specialized to
a rational number, a Fraction. Laurent polynomials, q-numbers, q-factorials and
cyclotomic factors are built on the same field, and `Scalars` decides which of
the two coefficient worlds a computation runs in.
"""
import logging
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd, lcm

from sympy import divisors, isprime
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from .exceptions import HeckeError, PoleError

logger = logging.getLogger(__name__)

FIELD, Q = field('q', QQ)
RING = FIELD.ring
FIELD_DOMAIN = FIELD.to_domain()

# Elements of Q(q) are sympy field elements; they stay reduced after every operation.
RingElem = FracElement


def to_fraction(c):
    """Convert a sympy QQ coefficient to a Fraction."""
    return Fraction(int(c.numerator), int(c.denominator))


def to_qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _poly_terms(poly):
    return {m[0]: to_fraction(c) for m, c in poly.items()}


def _poly_value(poly, x):
    return sum((to_fraction(c) * x ** m[0] for m, c in poly.items()), Fraction(0))


def ring_elem(x):
    """Coerce an int, Fraction, LaurentPoly or field element into Q(q)."""
    if isinstance(x, FracElement):
        return x
    if isinstance(x, LaurentPoly):
        return x.to_elem()
    return FIELD(to_qq(x))


class LaurentPoly:
    """
    Laurent polynomial in q with rational coefficients.

    Held as a field element whose denominator is a single term, so sums,
    products and exact quotients are done by sympy.
    """
    __slots__ = ('_elem',)

    def __init__(self, elem=0):
        if not isinstance(elem, FracElement):
            elem = FIELD(to_qq(elem))
        if len(elem.denom) != 1:
            raise HeckeError(f'{format_elem(elem)} is not a Laurent polynomial')
        self._elem = elem

    @classmethod
    def from_terms(cls, terms):
        elem = FIELD.zero
        for exponent, coeff in terms.items():
            elem += FIELD(to_qq(coeff)) * Q ** exponent
        return cls(elem)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls(FIELD(to_qq(coeff)) * Q ** exponent)

    @property
    def terms(self):
        """Mapping exponent -> nonzero Fraction coefficient."""
        ((shift,), scale), = self._elem.denom.items()
        scale = to_fraction(scale)
        return {m[0] - shift: to_fraction(c) / scale for m, c in self._elem.numer.items()}

    def to_elem(self):
        return self._elem

    def evaluate(self, x):
        x = Fraction(x)
        if x == 0 and any(e < 0 for e in self.terms):
            raise PoleError(f'{self} has a pole at q = 0')
        return sum((c * x ** e for e, c in self.terms.items()), Fraction(0))

    def exquo(self, other):
        """Exact quotient; raises if `other` does not divide self."""
        quotient = self._elem / ring_elem(other)
        if len(quotient.denom) != 1:
            raise HeckeError(f'{other} does not divide {self}')
        return LaurentPoly(quotient)

    def _other(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return ring_elem(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else LaurentPoly(self._elem + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else LaurentPoly(self._elem - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else LaurentPoly(o - self._elem)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else LaurentPoly(self._elem * o)

    __rmul__ = __mul__

    def __neg__(self):
        return LaurentPoly(-self._elem)

    def __pow__(self, k):
        return LaurentPoly(self._elem ** k)

    def __eq__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._elem == o

    def __hash__(self):
        return hash(self._elem)

    def __bool__(self):
        return bool(self._elem)

    def __str__(self):
        return format_terms(self.terms)

    def __repr__(self):
        return f'LaurentPoly({self})'


def format_terms(terms):
    """Canonical text form: descending exponents, each term as c*q^e."""
    items = sorted(((e, c) for e, c in terms.items() if c), reverse=True)
    if not items:
        return '0'
    out = []
    for position, (exponent, coeff) in enumerate(items):
        body = f'{abs(coeff)}*q^{exponent}'
        if position == 0:
            out.append(body if coeff > 0 else f'-{body}')
        else:
            out.append(f' + {body}' if coeff > 0 else f' - {body}')
    return ''.join(out)


def normal_form(elem):
    """
    Split an element of Q(q) into (numerator terms, denominator terms).

    The denominator has lowest exponent 0, integer coprime coefficients and a
    positive leading coefficient; the numerator absorbs everything else.
    """
    den = _poly_terms(elem.denom)
    shift = min(den)
    clear = lcm(*(c.denominator for c in den.values()))
    ints = {e - shift: int(c * clear) for e, c in den.items()}
    content = gcd(*ints.values())
    sign = 1 if ints[max(ints)] > 0 else -1
    den = {e: c // content * sign for e, c in ints.items()}
    scale = Fraction(clear * sign, content)
    num = {e - shift: c * scale for e, c in _poly_terms(elem.numer).items()}
    return num, den


def format_elem(x):
    """Canonical string for a scalar: `num / den`, or just `num` when den is 1."""
    if isinstance(x, LaurentPoly):
        return str(x)
    if not isinstance(x, FracElement):
        return str(Fraction(x))
    num, den = normal_form(x)
    if den == {0: 1}:
        return format_terms(num)
    return f'{format_terms(num)} / {format_terms(den)}'


def evaluate(elem, x):
    """Value of an element of Q(q) at the rational point q = x."""
    x = Fraction(x)
    den = _poly_value(elem.denom, x)
    if den == 0:
        raise PoleError(f'{format_elem(elem)} has a pole at q = {x}')
    return _poly_value(elem.numer, x) / den


def evaluate_float(elem, x):
    """Floating-point value at q = x; used only by the rotation check."""
    def value(poly):
        return sum(int(c.numerator) / int(c.denominator) * x ** m[0] for m, c in poly.items())
    return value(elem.numer) / value(elem.denom)


def is_q_free(elem):
    return elem.numer.degree() <= 0 and elem.denom.degree() <= 0


@lru_cache(maxsize=None)
def qnum(i, squared=True):
    """(1 - q^{ki}) / (1 - q^k) with k = 2 when squared, else k = 1."""
    k = 2 if squared else 1
    return LaurentPoly((1 - Q ** (k * i)) / (1 - Q ** k))


def qfactorial(n):
    """n_{q^2}! = n_{q^2} (n-1)_{q^2} ... 2_{q^2}."""
    if n < 1:
        raise HeckeError(f'qfactorial needs n >= 1, got {n}')
    return reduce(operator.mul, (qnum(i) for i in range(2, n + 1)), LaurentPoly(1))


@lru_cache(maxsize=None)
def cyclotomic(d):
    """d-th cyclotomic polynomial by exact division of q^d - 1 by the smaller ones."""
    if d < 1:
        raise HeckeError(f'cyclotomic needs d >= 1, got {d}')
    elem = Q ** d - 1
    for e in divisors(d)[:-1]:
        elem = elem / cyclotomic(e).to_elem()
    return LaurentPoly(elem)


def unit_divisors(n):
    """D_n = {d >= 3 : d divides 2i for some 2 <= i <= n}, ascending."""
    found = set()
    for i in range(2, n + 1):
        found.update(d for d in divisors(2 * i) if d >= 3)
    return sorted(found)


def is_unit(e, n):
    """
    True iff e is a unit of Z[q, 1/q, 1/n_{q^2}!].

    Numerator and denominator are stripped of powers of q and trial-divided by
    the cyclotomic factors of the inverted q-numbers; e is a unit exactly when
    both residuals are constants of equal absolute value.
    """
    e = ring_elem(e)
    if not e:
        raise HeckeError('zero is not a unit')
    x = RING.gens[0]
    residuals = []
    for poly in (e.numer, e.denom):
        terms = _poly_terms(poly)
        shift = min(terms)
        rest = RING.zero
        for exponent, coeff in terms.items():
            rest += to_qq(coeff) * x ** (exponent - shift)
        for d in unit_divisors(n):
            phi = cyclotomic(d).to_elem().numer
            while rest.degree() >= phi.degree():
                quotient, remainder = divmod(rest, phi)
                if remainder:
                    break
                rest = quotient
        residuals.append(rest)
    num, den = residuals
    if num.degree() > 0 or den.degree() > 0:
        return False
    return abs(to_fraction(num.LC) / to_fraction(den.LC)) == 1


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t over Z/pZ, known below degree `precision`."""
    coefficients: tuple
    prime: int
    precision: int

    @property
    def valuation(self):
        """Lowest degree with a nonzero coefficient, None if the truncation is zero."""
        return next((k for k, c in enumerate(self.coefficients) if c), None)

    @property
    def leading_coefficient(self):
        v = self.valuation
        return None if v is None else self.coefficients[v]

    def __str__(self):
        parts = []
        for degree, c in enumerate(self.coefficients):
            if not c:
                continue
            if degree == 0:
                parts.append(str(c))
            else:
                power = 't' if degree == 1 else f't^{degree}'
                parts.append(power if c == 1 else f'{c}*{power}')
        return ' + '.join(parts) or '0'


def _binomial(e, j):
    """Coefficient of t^j in (1 + t)^e, e any integer."""
    if e >= 0:
        return comb(e, j)
    return (-1) ** j * comb(j - e - 1, j)


def substitute_series(p, prime, precision):
    """Put q = 1 + t into p, reduce mod prime, keep the terms of degree < precision."""
    if not isprime(prime):
        raise HeckeError(f'{prime} is not prime')
    if precision < 1:
        raise HeckeError(f'precision must be positive, got {precision}')
    coefficients = [0] * precision
    for exponent, coeff in p.terms.items():
        if coeff.denominator % prime == 0:
            raise HeckeError(f'coefficient {coeff} of {p} is not integral at {prime}')
        c = coeff.numerator * pow(coeff.denominator, -1, prime)
        for j in range(precision):
            coefficients[j] += c * _binomial(exponent, j)
    return TruncatedSeries(tuple(c % prime for c in coefficients), prime, precision)


@dataclass(frozen=True)
class Scalars:
    """
    Where coefficients live.

    The default is the generic field Q(q). A rational `value` specializes
    q = value and coefficients become Fractions; value 1 is the classical case.
    """
    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None:
            value = Fraction(self.value)
            if value in (0, -1):
                raise HeckeError(f'q cannot be specialized to {value}')
            object.__setattr__(self, 'value', value)

    @property
    def generic(self):
        return self.value is None

    @property
    def classical(self):
        return self.value == 1

    @property
    def q(self):
        return Q if self.generic else self.value

    @property
    def zero(self):
        return FIELD.zero if self.generic else Fraction(0)

    @property
    def one(self):
        return FIELD.one if self.generic else Fraction(1)

    def __call__(self, x):
        if isinstance(x, LaurentPoly):
            return x.to_elem() if self.generic else x.evaluate(self.value)
        if isinstance(x, FracElement):
            return x if self.generic else evaluate(x, self.value)
        return FIELD(to_qq(x)) if self.generic else Fraction(x)

    def qnum(self, i, squared=True):
        return self(qnum(i, squared))

    @property
    def domain(self):
        """sympy domain for exact matrices over these scalars."""
        return FIELD_DOMAIN if self.generic else QQ

    def to_domain(self, x):
        return x if self.generic else to_qq(x)

    def from_domain(self, y):
        return y if self.generic else to_fraction(y)

    def format(self, x):
        return format_elem(x)

    def __str__(self):
        return 'symbolic' if self.generic else str(self.value)


GENERIC = Scalars()
CLASSICAL = Scalars(1)
