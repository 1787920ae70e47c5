import inspect

from django.test import SimpleTestCase

from hecke import exceptions
from hecke.exceptions import HeckeError


class ExceptionTests(SimpleTestCase):
    def test_every_error_is_documented(self):
        classes = [c for _, c in inspect.getmembers(exceptions, inspect.isclass) if issubclass(c, HeckeError)]
        self.assertEqual(len(classes), 9)
        for cls in classes:
            self.assertTrue(cls.__doc__, cls.__name__)
