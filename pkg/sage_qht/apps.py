from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class SageQhtConfig(AppConfig):
    name = "sage_qht"
    verbose_name = _("SAGE QHT")

    def ready(self):
        import sage_qht.checks
