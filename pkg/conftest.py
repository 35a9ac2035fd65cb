"""Pytest wiring: configure Django and a test database for the app test modules."""
import os

import django
import pytest

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'hardylab.settings')
django.setup()


@pytest.fixture(scope='session', autouse=True)
def _django_test_environment():
    from django.test.utils import get_runner
    from django.conf import settings

    runner = get_runner(settings)(verbosity=0, interactive=False)
    runner.setup_test_environment()
    old_config = runner.setup_databases()
    yield
    runner.teardown_databases(old_config)
    runner.teardown_test_environment()
