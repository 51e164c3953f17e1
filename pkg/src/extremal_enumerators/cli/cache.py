"""
On-disk cache of solved extremal enumerators, one JSON file per (type, n).

Entries carry a schema version and a sha256 checksum over their payload. Corrupt entries are renamed
with a `.bad` suffix; writes go through a temporary file and an atomic rename so concurrent writers
never leave a partial file behind.
"""
from dataclasses import dataclass
import hashlib
import json
import logging
import os
from pathlib import Path
import tempfile
import threading

from extremal_enumerators.gleason import (
    CodeType,
    ExtremalEnumerator,
    check_defining_property,
    extremal_enumerator,
    type_params,
)
from extremal_enumerators.polyarith import StepPoly, StepPolyException

SCHEMA_VERSION = 1
CACHE_DIR_ENV = "EXTREMAL_CACHE_DIR"
QUARANTINE_SUFFIX = ".bad"


class CacheEntryError(ValueError):
    pass


def payload_checksum(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    schema_version: int
    code_type: CodeType
    n: int
    a: tuple[str, ...]
    coefficients: tuple[str, ...]
    checksum: str

    @classmethod
    def from_enumerator(cls, enumerator: ExtremalEnumerator) -> "CacheEntry":
        a = tuple(str(v) for v in enumerator.a)
        coefficients = tuple(str(v) for v in enumerator.poly.coeffs)
        payload = _payload(SCHEMA_VERSION, enumerator.code_type, enumerator.n, a, coefficients)
        return cls(SCHEMA_VERSION, enumerator.code_type, enumerator.n, a, coefficients, payload_checksum(payload))

    @classmethod
    def from_json(cls, text: str) -> "CacheEntry":
        try:
            data = json.loads(text)
            return cls(
                schema_version=int(data["schema_version"]),
                code_type=CodeType.from_tag(data["code_type"]),
                n=int(data["n"]),
                a=tuple(str(v) for v in data["a"]),
                coefficients=tuple(str(v) for v in data["coefficients"]),
                checksum=str(data["checksum"]),
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise CacheEntryError(f"Malformed cache entry: {e}") from e

    def payload(self) -> dict:
        return _payload(self.schema_version, self.code_type, self.n, self.a, self.coefficients)

    @property
    def valid(self) -> bool:
        return payload_checksum(self.payload()) == self.checksum

    def to_json(self) -> str:
        return json.dumps({**self.payload(), "checksum": self.checksum}, indent=1)

    def to_enumerator(self) -> ExtremalEnumerator:
        params = type_params(self.code_type)
        j = self.n // params.S
        m = j // params.R
        try:
            a = tuple(int(v) for v in self.a)
            poly = StepPoly(self.n, params.w, tuple(int(v) for v in self.coefficients))
        except (ValueError, StepPolyException) as e:
            raise CacheEntryError(f"Cache entry for {self.code_type}-{self.n} does not decode: {e}") from e
        if len(a) != m + 1:
            raise CacheEntryError(f"Cache entry for {self.code_type}-{self.n} has {len(a)} basis coefficients")
        enumerator = ExtremalEnumerator(params.code_type, self.n, j, m, a, poly)
        check_defining_property(enumerator)
        return enumerator


def _payload(schema_version: int, code_type: CodeType, n: int, a: tuple[str, ...], coefficients: tuple[str, ...]):
    return {
        "schema_version": schema_version,
        "code_type": str(code_type),
        "n": n,
        "a": list(a),
        "coefficients": list(coefficients),
    }


class ResultCache:
    def __init__(self, directory: str | Path, logger: logging.Logger = None) -> None:
        self.directory = Path(directory)
        self.log = logger if logger else logging.getLogger(f"{__name__}.{self.directory.name}")

    def path_for(self, code_type: CodeType, n: int) -> Path:
        return self.directory / f"{CodeType(code_type)}-{n}.json"

    def get(self, code_type: CodeType, n: int) -> CacheEntry | None:
        path = self.path_for(code_type, n)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            self.log.debug("Cache miss: %s", path.name)
            return None
        except OSError as e:
            self.log.warning("Cannot read cache entry %s: %s", path, e)
            return None
        try:
            entry = CacheEntry.from_json(text)
        except CacheEntryError as e:
            self.log.warning("%s", e)
            self.quarantine(path)
            return None
        if entry.schema_version != SCHEMA_VERSION:
            self.log.debug("Stale schema %d in %s, recomputing", entry.schema_version, path.name)
            return None
        if not entry.valid or entry.code_type != CodeType(code_type) or entry.n != n:
            self.log.warning("Checksum or key mismatch in cache entry %s", path)
            self.quarantine(path)
            return None
        self.log.debug("Cache hit: %s", path.name)
        return entry

    def put(self, entry: CacheEntry) -> bool:
        path = self.path_for(entry.code_type, entry.n)
        tmp_name = None
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            with tempfile.NamedTemporaryFile(
                "w", encoding="utf-8", dir=self.directory, prefix=f".{path.stem}-", suffix=".tmp", delete=False
            ) as tmp:
                tmp_name = tmp.name
                tmp.write(entry.to_json())
                tmp.flush()
                os.fsync(tmp.fileno())
            os.replace(tmp_name, path)
        except OSError as e:
            self.log.warning("Cache directory %s is not writable, continuing uncached: %s", self.directory, e)
            if tmp_name is not None:
                Path(tmp_name).unlink(missing_ok=True)
            return False
        return True

    def quarantine(self, path: Path) -> None:
        target = path.with_name(path.name + QUARANTINE_SUFFIX)
        try:
            os.replace(path, target)
            self.log.warning("Quarantined corrupt cache entry as %s", target.name)
        except OSError as e:
            self.log.warning("Could not quarantine %s: %s", path, e)


_caches: dict[Path, ResultCache] = {}
_caches_lock = threading.Lock()


def get_cache(directory: str | Path | None) -> ResultCache | None:
    """Shared cache for a directory; None when caching is disabled."""
    if not directory:
        return None
    key = Path(directory).expanduser().resolve()
    if key not in _caches:
        with _caches_lock:
            if key not in _caches:
                _caches[key] = ResultCache(key)
    return _caches[key]


def load_or_compute(code_type: CodeType, n: int, cache_dir: str | Path | None = None) -> ExtremalEnumerator:
    cache = get_cache(cache_dir)
    if cache is not None:
        entry = cache.get(code_type, n)
        if entry is not None:
            try:
                return entry.to_enumerator()
            except (CacheEntryError, ArithmeticError) as e:
                cache.log.warning("Discarding cache entry %s-%s: %s", code_type, n, e)
                cache.quarantine(cache.path_for(code_type, n))
    enumerator = extremal_enumerator(code_type, n)
    if cache is not None:
        cache.put(CacheEntry.from_enumerator(enumerator))
    return enumerator
