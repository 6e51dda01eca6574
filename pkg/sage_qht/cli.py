import os
import sys

import django
from django.conf import settings
from django.core.management import ManagementUtility


def configure():
    """Minimal settings so the command runs outside a Django project."""
    if not settings.configured and not os.environ.get("DJANGO_SETTINGS_MODULE"):
        settings.configure(
            INSTALLED_APPS=["sage_qht"],
            LOGGING_CONFIG=None,
        )
    django.setup()


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    configure()
    ManagementUtility(["sage-qht", "qht", *argv]).execute()


if __name__ == "__main__":
    main()
