"""Verdict cache: round trips, version invalidation, corruption tolerance."""

import json

import pytest

from ringlab.cache import VerdictCache, cache_from_env


def test_put_get_round_trip(tmp_path):
    cache = VerdictCache(tmp_path / "cache.jsonl")
    assert cache.get("GR(Z3, C2)|weakly_nil_neat") is None
    cache.put("GR(Z3, C2)|weakly_nil_neat", {"ok": True, "witness": None})
    assert cache.get("GR(Z3, C2)|weakly_nil_neat") == {"ok": True, "witness": None}
    reloaded = VerdictCache(tmp_path / "cache.jsonl")
    assert reloaded.get("GR(Z3, C2)|weakly_nil_neat") == {"ok": True, "witness": None}


def test_version_bump_invalidates(tmp_path):
    path = tmp_path / "cache.jsonl"
    VerdictCache(path, version="0.0.1").put("k", {"ok": False})
    assert VerdictCache(path, version="0.0.2").get("k") is None
    assert VerdictCache(path, version="0.0.1").get("k") == {"ok": False}


def test_corrupt_middle_line_is_skipped(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = VerdictCache(path, version="v")
    cache.put("a", 1)
    with path.open("a") as fh:
        fh.write("{this is not json\n")
    cache.put("b", 2)
    with pytest.warns(UserWarning):
        reloaded = VerdictCache(path, version="v")
    assert reloaded.get("a") == 1
    assert reloaded.get("b") == 2


def test_missing_file_reads_empty(tmp_path):
    cache = VerdictCache(tmp_path / "absent.jsonl")
    assert cache.get("anything") is None
    assert len(cache) == 0


def test_last_entry_wins(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = VerdictCache(path, version="v")
    cache.put("k", 1)
    cache.put("k", 2)
    assert VerdictCache(path, version="v").get("k") == 2
    assert len(path.read_text().splitlines()) == 2  # append-only


def test_cache_from_env(tmp_path, monkeypatch):
    assert cache_from_env(None, disabled=True) is None
    monkeypatch.delenv("RINGLAB_CACHE", raising=False)
    assert cache_from_env(None) is None
    monkeypatch.setenv("RINGLAB_CACHE", str(tmp_path / "env.jsonl"))
    cache = cache_from_env(None)
    assert cache is not None and cache.path.name == "env.jsonl"
    flag_cache = cache_from_env(str(tmp_path / "flag.jsonl"))
    assert flag_cache.path.name == "flag.jsonl"


def test_cache_entries_are_json_lines(tmp_path):
    path = tmp_path / "cache.jsonl"
    VerdictCache(path).put("k", {"ok": True})
    record = json.loads(path.read_text().splitlines()[0])
    assert set(record) == {"key", "version", "value"}
