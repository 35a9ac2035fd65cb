"""
Django settings for hardylab project.

Project layout follows 'django-admin startproject'; there is no HTTP surface,
everything runs through management commands (see hardy.py and manage.py).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os
from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# No se sirve HTTP, la clave solo la usa el framework internamente
SECRET_KEY = config('SECRET_KEY', default='hardylab-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'tables',
    'locality',
    'paradoxes',
    'verification',
    'documents',
]

MIDDLEWARE = []


# Database
# Solo se usa para archivar reportes de barridos (verification.SweepRun)

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': config('DATABASE_PATH', default=str(BASE_DIR / 'db.sqlite3')),
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging

LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app in ('hardylab', 'tables', 'locality', 'paradoxes', 'verification', 'documents')
    },
}


# Barridos de verificacion: solo el numero de procesos es configurable
HARDY_WORKERS = config('HARDY_WORKERS', default=min(4, os.cpu_count() or 1), cast=int)
