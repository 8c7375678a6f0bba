"""
Django settings for the equilog workbench.

The workbench has no web surface; Django provides the settings layer,
the app registry, management commands and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-equilog-workbench-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    # Workbench apps
    'quantale',
    'vcat',
    'spaces',
    'equ',
    'pequ',
    'assembly',
    'completion',
    'oracle',
    'cli',
    # REST Framework (serializers for the document format)
    'rest_framework',
]


# Database
# Nothing is persisted; the default database only satisfies Django's checks.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# REST Framework settings
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}


# Equilog workbench settings
EQUILOG_MAX_CARRIER = config('EQUILOG_MAX_CARRIER', default=3, cast=int)
EQUILOG_ENUMERATION_BOUND = config('EQUILOG_ENUMERATION_BOUND', default=250000, cast=int)
EQUILOG_WITNESS_CARRIER_BOUND = config('EQUILOG_WITNESS_CARRIER_BOUND', default=4, cast=int)
EQUILOG_MAX_APPROACH_CARRIER = config('EQUILOG_MAX_APPROACH_CARRIER', default=6, cast=int)
EQUILOG_EXPONENTIAL_CHECK_CARRIER = config('EQUILOG_EXPONENTIAL_CHECK_CARRIER', default=2, cast=int)
EQUILOG_TIME_BUDGET = config('EQUILOG_TIME_BUDGET', default=300, cast=int)  # seconds
EQUILOG_LOG_LEVEL = config('EQUILOG_LOG_LEVEL', default='WARNING')


# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': EQUILOG_LOG_LEVEL,
            'propagate': False,
        }
        for app in [
            'quantale', 'vcat', 'spaces', 'equ', 'pequ',
            'assembly', 'completion', 'oracle', 'cli',
        ]
    },
}
