from django.apps import AppConfig


class EquConfig(AppConfig):
    name = 'equ'
    verbose_name = 'Equilogical objects'
