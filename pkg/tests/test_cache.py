"""Disk cache round trips, corruption handling, and validation."""

import pytest

import hitstab.cache as cache_mod
from hitstab.cache import CharacterCache, cache_get_or_compute, set_cache_dir
from hitstab.functor_eval import Character, simple_character

FILE = "simple_characters.txt"


def test_cold_then_warm(tmp_path):
    cache = CharacterCache(tmp_path)
    chi = cache.get_or_compute((2, 1))
    assert chi == simple_character((2, 1))
    path = tmp_path / FILE
    assert path.exists()
    size = path.stat().st_size
    warm = CharacterCache(tmp_path)
    assert warm.get((2, 1)) == chi
    assert warm.get_or_compute((2, 1)) == chi
    assert path.stat().st_size == size  # hit appends nothing


def test_line_format(tmp_path):
    CharacterCache(tmp_path).get_or_compute((2, 1))
    lines = (tmp_path / FILE).read_text().splitlines()
    assert len(lines) == 3
    assert any(" mu=2,1 coeff=1 crc=" in line for line in lines)
    assert any(" mu=1,1,1 coeff=2 crc=" in line for line in lines)
    assert lines[-1].startswith("p=2 d=3 lambda=2,1 mu=* coeff=2 crc=")


def test_corrupt_record_recomputed(tmp_path):
    CharacterCache(tmp_path).get_or_compute((2, 1))
    path = tmp_path / FILE
    path.write_text(path.read_text().replace("coeff=2", "coeff=7", 1))
    reread = CharacterCache(tmp_path)
    assert reread.get((2, 1)) is None
    assert reread.get_or_compute((2, 1)) == simple_character((2, 1))
    assert CharacterCache(tmp_path).get((2, 1)) == simple_character((2, 1))


def test_torn_group_then_rewrite(tmp_path):
    CharacterCache(tmp_path).get_or_compute((2, 1))
    path = tmp_path / FILE
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n")  # lose the trailer
    recovered = CharacterCache(tmp_path)
    assert recovered.get((2, 1)) is None
    recovered.get_or_compute((2, 1))
    assert CharacterCache(tmp_path).get((2, 1)) == simple_character((2, 1))


def test_interleaved_appends(tmp_path):
    cache = CharacterCache(tmp_path)
    cache.get_or_compute((2,))
    cache.get_or_compute((1, 1))
    path = tmp_path / FILE
    lines = path.read_text().splitlines()
    first = [line for line in lines if " lambda=2 " in line]
    second = [line for line in lines if " lambda=1,1 " in line]
    assert len(first) == 2 and len(second) == 2
    path.write_text("\n".join([first[0], second[0], first[1], second[1]]) + "\n")
    reread = CharacterCache(tmp_path)
    assert reread.get((2,)) == simple_character((2,))
    assert reread.get((1, 1)) == simple_character((1, 1))


def test_io_failure_warns(tmp_path):
    blocker = tmp_path / "blocked"
    blocker.write_text("not a directory")
    cache = CharacterCache(blocker / "sub")
    with pytest.warns(RuntimeWarning):
        chi = cache.get_or_compute((2,))
    assert chi == simple_character((2,))
    assert cache.get((2,)) == chi


def test_env_var_directory(tmp_path, monkeypatch):
    monkeypatch.setenv("HITSTAB_CACHE", str(tmp_path))
    CharacterCache(None).get_or_compute((1, 1))
    assert (tmp_path / FILE).exists()


def test_module_level_cache(tmp_path, monkeypatch):
    monkeypatch.delenv("HITSTAB_CACHE", raising=False)
    set_cache_dir(tmp_path)
    try:
        assert cache_get_or_compute((2, 1)) == simple_character((2, 1))
        assert (tmp_path / FILE).exists()
    finally:
        set_cache_dir(None)


def test_rejects_non_partition(tmp_path):
    with pytest.raises(ValueError):
        CharacterCache(tmp_path).get_or_compute((1, 2))


def test_validation_blocks_bad_leading_term(tmp_path, monkeypatch):
    bogus = Character(3, {(2, 1): 2, (1, 1, 1): 1})
    monkeypatch.setattr(cache_mod, "simple_character", lambda lam: bogus)
    with pytest.raises(RuntimeError):
        CharacterCache(tmp_path).get_or_compute((2, 1))
    assert not (tmp_path / FILE).exists()


def test_validation_blocks_bad_layers(tmp_path, monkeypatch):
    bogus = Character(2, {(2,): 1, (1, 1): 1})
    monkeypatch.setattr(cache_mod, "simple_character", lambda lam: bogus)
    with pytest.raises(RuntimeError):
        CharacterCache(tmp_path).get_or_compute((2,))
