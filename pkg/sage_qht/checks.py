from numbers import Integral, Real

from django.conf import settings
from django.core.checks import Error, register

from sage_qht.utils.config import DEFAULTS, TOLERANCE_SETTINGS


def _value(name):
    return getattr(settings, name, DEFAULTS[name])


@register()
def check_tolerances(app_configs, **kwargs):
    errors = []
    for name in TOLERANCE_SETTINGS:
        value = _value(name)
        if isinstance(value, bool) or not isinstance(value, Real) or value <= 0:
            errors.append(
                Error(
                    f"'{name}' must be a positive number, got {value!r}.",
                    hint=f"Set '{name}' to a positive float or remove it to use {DEFAULTS[name]}.",
                    obj=settings,
                    id="qht.E001",
                )
            )
    return errors


@register()
def check_sampling(app_configs, **kwargs):
    errors = []
    size = _value("QHT_SAMPLE_SIZE")
    if isinstance(size, bool) or not isinstance(size, Integral) or size <= 0:
        errors.append(
            Error(
                f"'QHT_SAMPLE_SIZE' must be a positive integer, got {size!r}.",
                hint="Holomorphy classification needs at least one sample point.",
                obj=settings,
                id="qht.E002",
            )
        )
    seed = _value("QHT_SAMPLE_SEED")
    if isinstance(seed, bool) or not isinstance(seed, Integral) or seed < 0:
        errors.append(
            Error(
                f"'QHT_SAMPLE_SEED' must be a non-negative integer, got {seed!r}.",
                hint="Use an integer seed so sampled points are reproducible.",
                obj=settings,
                id="qht.E003",
            )
        )
    bound = _value("QHT_SAMPLE_BOUND")
    if isinstance(bound, bool) or not isinstance(bound, Real) or bound <= 0:
        errors.append(
            Error(
                f"'QHT_SAMPLE_BOUND' must be a positive number, got {bound!r}.",
                hint="Components are drawn from [-bound, bound].",
                obj=settings,
                id="qht.E004",
            )
        )
    return errors
