SECRET_KEY = "sage-qht-test-key"

DEBUG = True

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "sage_qht",
]

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
    }
}

USE_TZ = True

QHT_FD_STEP = 1e-5
QHT_HOLOMORPHY_TOLERANCE = 1e-6
QHT_SAMPLE_SIZE = 20
QHT_SAMPLE_SEED = 0x5EED

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"console": {"class": "logging.StreamHandler"}},
    "loggers": {"sage_qht": {"handlers": ["console"], "level": "WARNING"}},
}
