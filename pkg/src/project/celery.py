import os

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "project.settings")

from celery import Celery
app = Celery('coxbraid')

# Settings are read from the CELERY_* names in project.settings.
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks()
