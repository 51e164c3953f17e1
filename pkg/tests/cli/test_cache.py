import json
import logging

import pytest

from extremal_enumerators.cli.cache import (
    SCHEMA_VERSION,
    CacheEntry,
    CacheEntryError,
    ResultCache,
    get_cache,
    load_or_compute,
    payload_checksum,
)
from extremal_enumerators.gleason import CodeType, extremal_enumerator


@pytest.fixture
def cache(tmp_path):
    yield ResultCache(tmp_path / "cache")


@pytest.fixture
def entry():
    yield CacheEntry.from_enumerator(extremal_enumerator(CodeType.III, 12))


def test_round_trip(cache, entry):
    assert cache.put(entry)
    stored = cache.get(CodeType.III, 12)
    assert stored == entry
    assert stored.coefficients == ("1", "0", "264", "440", "24")
    assert stored.to_enumerator() == extremal_enumerator(CodeType.III, 12)


def test_miss(cache):
    assert cache.get(CodeType.II, 24) is None


def test_truncated_file_is_quarantined(cache, entry):
    cache.put(entry)
    path = cache.path_for(CodeType.III, 12)
    path.write_text(entry.to_json()[:25], encoding="utf-8")
    assert cache.get(CodeType.III, 12) is None
    assert not path.exists()
    assert path.with_name("iii-12.json.bad").exists()


def test_stale_schema_is_ignored(cache, entry):
    cache.put(entry)
    path = cache.path_for(CodeType.III, 12)
    data = json.loads(path.read_text(encoding="utf-8"))
    data["schema_version"] = SCHEMA_VERSION + 1
    path.write_text(json.dumps(data), encoding="utf-8")
    assert cache.get(CodeType.III, 12) is None
    assert path.exists()


def test_checksum_mismatch_is_quarantined(cache, entry):
    cache.put(entry)
    path = cache.path_for(CodeType.III, 12)
    data = json.loads(path.read_text(encoding="utf-8"))
    data["coefficients"][2] = "265"
    path.write_text(json.dumps(data), encoding="utf-8")
    assert cache.get(CodeType.III, 12) is None
    assert path.with_name(path.name + ".bad").exists()


def test_entry_under_the_wrong_name_is_quarantined(cache, entry):
    cache.put(entry)
    cache.path_for(CodeType.III, 12).rename(cache.path_for(CodeType.III, 24))
    assert cache.get(CodeType.III, 24) is None
    assert cache.path_for(CodeType.III, 24).with_name("iii-24.json.bad").exists()


def test_unwritable_directory_warns(tmp_path, entry, caplog):
    blocker = tmp_path / "not-a-dir"
    blocker.write_text("", encoding="utf-8")
    cache = ResultCache(blocker)
    with caplog.at_level(logging.WARNING):
        assert cache.put(entry) is False
    assert "not writable" in caplog.text


def test_malformed_entry():
    with pytest.raises(CacheEntryError):
        CacheEntry.from_json("{}")
    with pytest.raises(CacheEntryError):
        CacheEntry.from_json("not json")


def test_inconsistent_entry_does_not_decode(entry):
    short = CacheEntry(entry.schema_version, entry.code_type, entry.n, entry.a, entry.coefficients[:-1], "x")
    with pytest.raises(CacheEntryError):
        short.to_enumerator()


def test_get_cache_is_shared(tmp_path):
    assert get_cache(None) is None
    assert get_cache("") is None
    assert get_cache(tmp_path) is get_cache(str(tmp_path))


def test_load_or_compute_fills_the_cache(tmp_path):
    enumerator = load_or_compute(CodeType.II, 24, cache_dir=tmp_path)
    assert enumerator == extremal_enumerator(CodeType.II, 24)
    assert (tmp_path / "ii-24.json").is_file()
    assert load_or_compute(CodeType.II, 24, cache_dir=tmp_path) == enumerator
    assert load_or_compute(CodeType.II, 24) == enumerator


def test_load_or_compute_replaces_a_lying_entry(tmp_path):
    cache = get_cache(tmp_path)
    genuine = extremal_enumerator(CodeType.III, 12)
    forged = CacheEntry.from_enumerator(genuine)
    coefficients = ("1", "1", "263", "440", "24")
    payload = {**forged.payload(), "coefficients": list(coefficients)}
    checksum = payload_checksum(payload)
    cache.put(CacheEntry(forged.schema_version, forged.code_type, 12, forged.a, coefficients, checksum))
    assert load_or_compute(CodeType.III, 12, cache_dir=tmp_path) == genuine
    assert CacheEntry.from_json((tmp_path / "iii-12.json").read_text(encoding="utf-8")).coefficients[1] == "0"


if __name__ == "__main__":
    pytest.main(["-v", __file__])
