"""
WSGI config for the SiteSurveyProject project.

Exposes the WSGI callable as ``application`` for serving the site survey API.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'SiteSurveyProject.settings')

application = get_wsgi_application()
