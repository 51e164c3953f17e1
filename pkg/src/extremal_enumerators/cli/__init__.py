"""
Command-line front end and on-disk result cache.

Classes:
- ResultCache: per-directory JSON cache of solved enumerators.
- CacheEntry: one cached (type, n) result with schema version and checksum.
- OutputRecord: serialisable view of one enumerator.
"""

from .cache import CacheEntry, ResultCache, get_cache, load_or_compute
from .output import OutputRecord

__all__ = ["CacheEntry", "ResultCache", "OutputRecord", "get_cache", "load_or_compute"]
