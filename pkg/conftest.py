import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'equilog.settings')
django.setup()
