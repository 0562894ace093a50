from django.apps import AppConfig


class DeciderConfig(AppConfig):
    name = 'decider'
    verbose_name = 'Quantifier elimination for ordered structures'
    default_auto_field = 'django.db.models.AutoField'
