from .config import get_setting
from .encoders import QhtJSONEncoder, dumps

__all__ = [
    "get_setting",
    "QhtJSONEncoder",
    "dumps",
]
