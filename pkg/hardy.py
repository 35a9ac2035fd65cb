#!/usr/bin/env python
"""Command-line entry point for the empirical model analyses."""
import os
import sys


def main():
    """Run an analysis subcommand."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'hardylab.settings')
    try:
        from hardylab.cli import dispatch
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    sys.exit(dispatch(sys.argv))


if __name__ == '__main__':
    main()
