"""Configure Django before pytest collects the hecke test modules."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'heckebasis_project.settings')
django.setup()
