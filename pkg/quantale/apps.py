from django.apps import AppConfig


class QuantaleConfig(AppConfig):
    name = 'quantale'
    verbose_name = 'Quantales'
