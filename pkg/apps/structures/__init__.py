import logging

logger = logging.getLogger(__name__)
logger.debug("Structures app initialized")
