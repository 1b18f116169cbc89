from simadc.utils.misc import with_lock, format_float
from simadc.utils.singleton import Singleton


__all__ = [
    'with_lock',
    'format_float',
    'Singleton',
]
