"""
Simple Result Cache for theorem checks
Caches per (theorem, instance, grid) reports so repeated corpus runs skip checks already done
"""

import hashlib
import json
import time
from pathlib import Path
from typing import Optional, Dict, Any
import logging

logger = logging.getLogger(__name__)


class SimpleResultCache:
    """
    File-based cache for theorem check reports.
    Uses a hash of the instance table and the check parameters as key.
    """

    def __init__(self, cache_dir: str = "./cache", ttl_seconds: int = 86400):
        """
        Initialize cache.

        Args:
            cache_dir: Directory to store cache files
            ttl_seconds: Time-to-live for cache entries (default: 1 day)
        """
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self.ttl_seconds = ttl_seconds
        logger.info(f"✅ ResultCache initialized: {self.cache_dir} (TTL: {ttl_seconds}s)")

    def make_key(self, table_bytes: bytes, shape: tuple, theorem_id: str, parameters: str) -> str:
        """Hash of the Cayley table, its shape, the theorem id and the check parameters."""
        digest = hashlib.sha256()
        digest.update(repr(tuple(shape)).encode())
        digest.update(table_bytes)
        digest.update(f":{theorem_id}:{parameters}".encode())
        return digest.hexdigest()

    def _get_cache_path(self, key: str) -> Path:
        return self.cache_dir / f"{key}.json"

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        """
        Retrieve cached report if available and not expired.

        Returns:
            Cached report dict or None if not found/expired
        """
        cache_path = self._get_cache_path(key)

        if not cache_path.exists():
            logger.debug(f"Cache MISS: {key[:8]}")
            return None

        try:
            with open(cache_path, 'r') as f:
                cached_data = json.load(f)

            age = time.time() - cached_data.get('timestamp', 0)
            if age > self.ttl_seconds:
                logger.info(f"Cache EXPIRED: {key[:8]} (age: {age:.0f}s)")
                cache_path.unlink()
                return None

            logger.debug(f"♻️ Cache HIT: {key[:8]} (age: {age:.0f}s)")
            return cached_data.get('result')

        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Cache read error: {e}")
            return None

    def set(self, key: str, theorem_id: str, result: Dict[str, Any]) -> None:
        """Store a report in the cache."""
        cache_path = self._get_cache_path(key)

        try:
            cached_data = {
                'timestamp': time.time(),
                'key': key,
                'theorem': theorem_id,
                'result': result
            }
            with open(cache_path, 'w') as f:
                json.dump(cached_data, f, indent=2)
            logger.debug(f"Cache SET: {key[:8]}")

        except OSError as e:
            logger.error(f"Cache write error: {e}")

    def clear_expired(self) -> int:
        """
        Clear all expired cache entries.

        Returns:
            Number of entries deleted
        """
        deleted = 0
        current_time = time.time()

        for cache_file in self.cache_dir.glob("*.json"):
            try:
                with open(cache_file, 'r') as f:
                    cached_data = json.load(f)
                if current_time - cached_data.get('timestamp', 0) > self.ttl_seconds:
                    cache_file.unlink()
                    deleted += 1
            except (OSError, json.JSONDecodeError):
                continue

        if deleted > 0:
            logger.info(f"Cleared {deleted} expired cache entries")
        return deleted

    def clear_all(self) -> int:
        """Clear all cache entries."""
        deleted = 0
        for cache_file in self.cache_dir.glob("*.json"):
            cache_file.unlink()
            deleted += 1
        logger.info(f"Cleared all cache: {deleted} entries")
        return deleted


# Global cache instances by directory
_cache_instances: Dict[str, SimpleResultCache] = {}


def get_cache(cache_dir: str, ttl_seconds: int = 86400) -> SimpleResultCache:
    """Get or create the cache for a directory."""
    key = str(Path(cache_dir).resolve())
    if key not in _cache_instances:
        _cache_instances[key] = SimpleResultCache(cache_dir, ttl_seconds)
    return _cache_instances[key]
