from django.apps import AppConfig


class SiteSurveyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'site_survey'
    verbose_name = 'WLAN site survey'

    def ready(self):
        import site_survey.signals
