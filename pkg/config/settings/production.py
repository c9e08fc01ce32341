import os
import logging
from .base import *

logger = logging.getLogger(__name__)

DEBUG = False

if IE_WORKERS < 1:
    logger.error(f"IE_WORKERS must be at least 1, got {IE_WORKERS}; falling back to a single process.")
    IE_WORKERS = 1

# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'apps.structures': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}
