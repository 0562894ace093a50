"""
Django settings for the ordered-structures-qe project.

There is no web front end: the project is driven entirely through the
management commands of the decider app, which run GraphQL queries in process.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# Only used by Django internals; nothing here is signed or served.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'ordered-structures-qe-not-secret')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django_filters',
    'graphene_django',
    'decider',
]


# Database
# The battery fixture is the only data; tests load it into a throwaway database.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


GRAPHENE = {
    'SCHEMA': 'project.schema.schema',
}

# See decider/conf.py for the defaults of every key.
DECIDER = {
    'WITNESS_BUDGET': 100,
    'OUTPUT_FORMAT': 'text',
    'TRACE': False,
}


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'decider': {
            'handlers': ['console'],
            'level': os.environ.get('DECIDER_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
