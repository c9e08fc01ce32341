"""
Django settings for the structures project.

The project has no web surface: it hosts the ``apps.structures`` library and
its management commands. Numerical defaults are read from the environment
(optionally through a ``.env`` file at the project root).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
import os

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

load_dotenv(BASE_DIR / '.env')

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'django-insecure-development-key')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'apps.structures',
]

# Database
# https://docs.djangoproject.com/en/4.2/ref/settings/#databases
# Nothing is persisted; the database only satisfies Django's defaults.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework settings
REST_FRAMEWORK = {
    'STRICT_JSON': True,
    'COERCE_DECIMAL_TO_STRING': False,
}

# Information estimation settings
# Example: IE_TOLERANCE=1e-6 IE_WORKERS=4
IE_TOLERANCE = float(os.environ.get('IE_TOLERANCE', '1e-9'))
IE_FLOAT_PLACES = int(os.environ.get('IE_FLOAT_PLACES', '9'))
IE_MAX_ORDER = int(os.environ.get('IE_MAX_ORDER', '12'))
IE_MAX_DISTINCTNESS_ORDER = int(os.environ.get('IE_MAX_DISTINCTNESS_ORDER', '10'))
IE_WORKERS = int(os.environ.get('IE_WORKERS', '1'))
