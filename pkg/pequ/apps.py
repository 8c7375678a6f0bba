from django.apps import AppConfig


class PequConfig(AppConfig):
    name = 'pequ'
    verbose_name = 'Partial equilogical objects'
