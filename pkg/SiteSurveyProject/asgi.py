"""
ASGI config for the SiteSurveyProject project.

Serves the site survey REST API under an ASGI server; the radio toolkit
itself is used through ``manage.py`` commands.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'SiteSurveyProject.settings')

application = get_asgi_application()
