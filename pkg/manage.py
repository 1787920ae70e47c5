#!/usr/bin/env python
"""Entry point for the heckebasis commands: basis, verify, idempotents, df."""
import os
import sys


def main():
    """Run a management command."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'heckebasis_project.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the packages in requirements.txt "
            "into the active environment first."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
