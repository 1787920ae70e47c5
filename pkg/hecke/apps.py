from django.apps import AppConfig


class HeckeConfig(AppConfig):
    name = 'hecke'
    verbose_name = 'Hecke algebra canonical bases'
