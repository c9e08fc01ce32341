from django.apps import AppConfig
import logging

logger = logging.getLogger(__name__)


class StructuresConfig(AppConfig):
    name = 'apps.structures'
    verbose_name = 'Information estimations of structures'

    def ready(self):
        from django.conf import settings

        logger.debug(
            f"[STARTUP] Structures app ready - tolerance {getattr(settings, 'IE_TOLERANCE', 1e-9)}, "
            f"workers {getattr(settings, 'IE_WORKERS', 1)}"
        )
