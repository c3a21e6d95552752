# Test collection wiring: the suite is written for `manage.py test`, so
# configure Django before pytest imports the test modules.
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "project.settings")
django.setup()
