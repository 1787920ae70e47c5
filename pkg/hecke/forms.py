from dataclasses import dataclass
from fractions import Fraction

from django import forms
from django.conf import settings

from .canonbasis import Partition
from .exceptions import HeckeError
from .qarith import GENERIC, Scalars


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command run."""
    n: int
    d: int
    partition: Partition | None
    scalars: Scalars
    output_format: str
    seeds: tuple
    t_values: tuple
    primes: tuple
    verbosity: int = 1


def _split(text):
    return [x.strip() for x in str(text or '').split(',') if x.strip()]


class RunConfigForm(forms.Form):
    """Validates the shared command-line options and builds a RunConfig"""
    n = forms.IntegerField(min_value=1)
    d = forms.IntegerField(min_value=1, required=False)
    partition = forms.CharField(required=False)
    q = forms.CharField(required=False)
    output_format = forms.ChoiceField(choices=[('json', 'json'), ('csv', 'csv'), ('text', 'text')], required=False)
    seeds = forms.CharField(required=False)
    t = forms.CharField(required=False)
    primes = forms.CharField(required=False)
    verbosity = forms.IntegerField(required=False)

    def __init__(self, *args, max_n=None, default_format='json', **kwargs):
        super().__init__(*args, **kwargs)
        self.max_n = max_n or settings.HECKE_MAX_N
        self.default_format = default_format

    def clean_n(self):
        n = self.cleaned_data['n']
        if n > self.max_n:
            raise forms.ValidationError(f'n = {n} is above the limit of {self.max_n}')
        return n

    def clean_d(self):
        d = self.cleaned_data.get('d')
        if d is not None and d > settings.HECKE_MAX_D:
            raise forms.ValidationError(f'd = {d} is above the limit of {settings.HECKE_MAX_D}')
        return d

    def clean_q(self):
        text = (self.cleaned_data.get('q') or 'symbolic').strip()
        if text == 'symbolic':
            return GENERIC
        try:
            return Scalars(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise forms.ValidationError(f'q must be "symbolic" or a rational number, got {text!r}')
        except HeckeError as exc:
            raise forms.ValidationError(str(exc))

    def clean_seeds(self):
        text = self.cleaned_data.get('seeds')
        if not text:
            return tuple(settings.HECKE_SEEDS)
        try:
            seeds = tuple(Fraction(x) for x in _split(text))
        except (ValueError, ZeroDivisionError):
            raise forms.ValidationError(f'cannot read seeds from {text!r}')
        if not seeds or any(s in (0, 1, -1) for s in seeds):
            raise forms.ValidationError('seeds must be rationals other than 0, 1 and -1')
        return seeds

    def clean_t(self):
        text = self.cleaned_data.get('t')
        if not text:
            return (0.1, 0.25)
        try:
            return tuple(float(x) for x in _split(text))
        except ValueError:
            raise forms.ValidationError(f'cannot read t values from {text!r}')

    def clean_primes(self):
        try:
            return tuple(int(x) for x in _split(self.cleaned_data.get('primes')))
        except ValueError:
            raise forms.ValidationError('primes must be a comma-separated list of integers')

    def clean(self):
        cleaned = super().clean()
        n = cleaned.get('n')
        if n is None:
            return cleaned
        d = cleaned.get('d') or min(n, settings.HECKE_MAX_D)
        cleaned['d'] = d
        text = cleaned.get('partition')
        if text:
            try:
                p = Partition.parse(text, d)
            except HeckeError as exc:
                self.add_error('partition', str(exc))
            else:
                if p.n != n:
                    self.add_error('partition', f'{text} is a partition of {p.n}, not of {n}')
                cleaned['partition'] = p
        else:
            cleaned['partition'] = None
        return cleaned

    def to_config(self):
        data = self.cleaned_data
        return RunConfig(
            n=data['n'],
            d=data['d'],
            partition=data['partition'],
            scalars=data['q'],
            output_format=data.get('output_format') or self.default_format,
            seeds=data['seeds'],
            t_values=data['t'],
            primes=data['primes'],
            verbosity=data.get('verbosity') or 1,
        )
