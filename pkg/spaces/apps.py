from django.apps import AppConfig


class SpacesConfig(AppConfig):
    name = 'spaces'
    verbose_name = 'Finite topological and approach spaces'
