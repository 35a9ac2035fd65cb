from django.apps import AppConfig


class ParadoxesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'paradoxes'
