from django.apps import AppConfig


class LocalityConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'locality'
