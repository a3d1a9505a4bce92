import logging

from django.db.models.signals import post_delete, post_save
from django.dispatch import receiver

from .models import Measurement, PathLossFit

logger = logging.getLogger(__name__)


@receiver(post_save, sender=Measurement)
@receiver(post_delete, sender=Measurement)
def discard_stale_fit(sender, instance, **kwargs):
    """A stored fit no longer describes its location once the measurements change."""
    deleted, _ = PathLossFit.objects.filter(location_id=instance.location_id).delete()
    if deleted:
        logger.info('discarded stale fit for location %s', instance.location_id)
