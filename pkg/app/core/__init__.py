from .config import Settings, settings
from .console import Console, console
from .cache import VerifiedCategoryStore, category_cache, verified_store
from .exceptions import (
    CalibrationError,
    InvalidInputError,
    MtcdefError,
    TypeMismatchError,
    VerificationError,
)

__all__ = [
    'Settings', 'settings', 'Console', 'console',
    'VerifiedCategoryStore', 'category_cache', 'verified_store',
    'MtcdefError', 'InvalidInputError', 'TypeMismatchError',
    'VerificationError', 'CalibrationError',
]
