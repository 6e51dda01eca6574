from django.conf import settings

DEFAULTS = {
    "QHT_FD_STEP": 1e-5,
    "QHT_HOLOMORPHY_TOLERANCE": 1e-6,
    "QHT_SAMPLE_SIZE": 20,
    "QHT_SAMPLE_SEED": 0x5EED,
    "QHT_SAMPLE_BOUND": 2.0,
    "QHT_CLASSIFY_TOLERANCE": 1e-9,
    "QHT_EXP_TOLERANCE": 1e-16,
    "QHT_DEGENERACY_TOLERANCE": 1e-10,
    "QHT_MOBIUS_DEGENERACY_TOLERANCE": 1e-12,
}

TOLERANCE_SETTINGS = (
    "QHT_FD_STEP",
    "QHT_HOLOMORPHY_TOLERANCE",
    "QHT_CLASSIFY_TOLERANCE",
    "QHT_EXP_TOLERANCE",
    "QHT_DEGENERACY_TOLERANCE",
    "QHT_MOBIUS_DEGENERACY_TOLERANCE",
)


def get_setting(name, override=None):
    """
    Resolve a numeric knob of the library.

    An explicit ``override`` wins; otherwise the Django setting of the same
    name is used when settings are configured, falling back to the packaged
    default. The library stays usable without a Django project.
    """
    if override is not None:
        return override
    default = DEFAULTS[name]
    if not settings.configured:
        return default
    return getattr(settings, name, default)
