from django.apps import AppConfig


class VcatConfig(AppConfig):
    name = 'vcat'
    verbose_name = 'Finite V-categories'
