"""
Caches

In-memory LRU caches for generated data and an optional on-disk store of
verified category files keyed by content hash.
"""

import hashlib
from pathlib import Path
from typing import Optional

from cachetools import LRUCache

from .config import settings


# Generated sl(2)_k categories, keyed by level
category_cache: LRUCache = LRUCache(maxsize=8)


class VerifiedCategoryStore:
    """Marker files recording which category contents already passed verification"""

    def __init__(self, root: Optional[Path] = None):
        self.root = root if root is not None else settings.cache_path

    @staticmethod
    def content_hash(text: str) -> str:
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    @property
    def enabled(self) -> bool:
        return self.root is not None

    def _marker(self, digest: str) -> Path:
        return self.root / f"{digest}.verified"

    def is_verified(self, digest: str) -> bool:
        return self.enabled and self._marker(digest).exists()

    def mark_verified(self, digest: str):
        if not self.enabled:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        self._marker(digest).write_text(digest)


verified_store = VerifiedCategoryStore()
