"""
Caching System

In-memory memo table for irreducible characters, safe for concurrent readers.
"""

import time
from dataclasses import dataclass, field
from threading import Lock
from typing import Any, Callable, Dict, Hashable, Optional, Tuple

from loguru import logger

CacheKey = Tuple[str, Hashable]


@dataclass
class CacheEntry:
    """Cache entry with metadata."""
    key: CacheKey
    value: Any
    created_at: float = field(default_factory=time.time)
    hits: int = 0


class CharacterCache:
    """Memo table keyed by (root system label, highest weight)."""

    def __init__(self, name: str = "characters"):
        self.name = name
        self.cache: Dict[CacheKey, CacheEntry] = {}
        self.lock = Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: CacheKey) -> Optional[Any]:
        """Get value from cache."""
        with self.lock:
            entry = self.cache.get(key)
            if entry is None:
                self.misses += 1
                return None
            entry.hits += 1
            self.hits += 1
            logger.debug(f"Cache hit: {key}")
            return entry.value

    def put_if_absent(self, key: CacheKey, value: Any) -> Any:
        """Store value unless the key is present; returns the stored value."""
        with self.lock:
            entry = self.cache.get(key)
            if entry is None:
                entry = CacheEntry(key=key, value=value)
                self.cache[key] = entry
            return entry.value

    def get_or_compute(self, key: CacheKey, compute: Callable[[], Any]) -> Any:
        """
        Cached value for key, computing it on a miss.

        The computation runs outside the lock; when two threads race the first
        insert wins and both callers receive that value.
        """
        cached = self.get(key)
        if cached is not None:
            return cached
        return self.put_if_absent(key, compute())

    def __contains__(self, key: CacheKey) -> bool:
        with self.lock:
            return key in self.cache

    def __len__(self) -> int:
        with self.lock:
            return len(self.cache)

    def clear(self):
        """Clear all cache entries."""
        with self.lock:
            self.cache.clear()
            self.hits = 0
            self.misses = 0
            logger.debug(f"Cache '{self.name}' cleared")

    def get_stats(self) -> Dict[str, Any]:
        """Get cache statistics."""
        with self.lock:
            lookups = self.hits + self.misses
            return {
                "name": self.name,
                "entries": len(self.cache),
                "hits": self.hits,
                "misses": self.misses,
                "hit_rate": (self.hits / lookups) if lookups else 0.0,
            }


# Default cache used by the character machinery
character_cache = CharacterCache()
