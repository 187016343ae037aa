"""Append-only disk cache for simple character tables.

Each character is stored as a group of text lines, one coefficient per
line, closed by a ``mu=*`` trailer carrying the term count.  Every line
ends in a CRC of its own payload, so torn writes and bit rot invalidate
only the group they touch; the loader keeps the last complete valid
group per key and ignores everything else.  Recomputation appends a
fresh group rather than rewriting the file.
"""

from __future__ import annotations

import os
import warnings
import zlib
from pathlib import Path

from .combinat import Partition, check_partition, format_partition, parse_partition
from .functor_eval import Character, simple_character, steinberg_product_check

_FILENAME = "simple_characters.txt"
_ENV_VAR = "HITSTAB_CACHE"


def _payload(d: int, lam: Partition, mu_text: str, coeff: int) -> str:
    return f"p=2 d={d} lambda={format_partition(lam)} mu={mu_text} coeff={coeff}"


def _line(payload: str) -> str:
    return f"{payload} crc={zlib.crc32(payload.encode()) & 0xFFFFFFFF:08x}"


def _parse_line(line: str):
    """Return (d, lam, mu_or_None, coeff) for a checksum-valid line, else None."""
    payload, sep, crc = line.rpartition(" crc=")
    if not sep or len(crc) != 8:
        return None
    try:
        if int(crc, 16) != zlib.crc32(payload.encode()) & 0xFFFFFFFF:
            return None
    except ValueError:
        return None
    fields = {}
    for chunk in payload.split(" "):
        key, sep, value = chunk.partition("=")
        if not sep or key in fields:
            return None
        fields[key] = value
    if sorted(fields) != ["coeff", "d", "lambda", "mu", "p"] or fields["p"] != "2":
        return None
    try:
        d = int(fields["d"])
        coeff = int(fields["coeff"])
        lam = check_partition(parse_partition(fields["lambda"]))
        mu = None if fields["mu"] == "*" else check_partition(parse_partition(fields["mu"]))
    except ValueError:
        return None
    return d, lam, mu, coeff


def _validate(lam: Partition, chi: Character) -> None:
    # two cross-checks before anything is persisted
    if lam and chi.coeff(lam) != 1:
        raise RuntimeError(f"character of {lam} is not unitriangular; refusing to cache")
    if lam and not steinberg_product_check(lam, chi=chi):
        raise RuntimeError(f"character of {lam} fails layer factorization; refusing to cache")


class CharacterCache:
    """Disk-backed map from partitions to their simple characters.

    ``directory=None`` consults the HITSTAB_CACHE environment variable;
    if that is unset too, the cache is memory-only.  All I/O failures
    degrade to memory-only operation with a warning.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        if directory is None:
            directory = os.environ.get(_ENV_VAR) or None
        self.path = Path(directory) / _FILENAME if directory is not None else None
        self._mem: dict[Partition, Character] = {}
        self._loaded = self.path is None

    def _load(self) -> None:
        self._loaded = True
        if self.path is None or not self.path.exists():
            return
        try:
            text = self.path.read_text(encoding="ascii", errors="replace")
        except OSError as exc:
            warnings.warn(f"cache read failed ({exc}); continuing in memory", RuntimeWarning)
            return
        open_groups: dict[Partition, list] = {}
        for line in text.splitlines():
            parsed = _parse_line(line)
            if parsed is None:
                continue
            d, lam, mu, coeff = parsed
            if mu is None:
                rows = open_groups.pop(lam, [])
                if len(rows) < coeff:
                    continue  # torn group
                rows = rows[-coeff:]  # a torn prefix may precede a complete rewrite
                if len({m for _rd, m, _c in rows}) != len(rows):
                    continue
                if any(rd != d or sum(m) != d for rd, m, _c in rows):
                    continue
                try:
                    self._mem[lam] = Character(d, {m: c for _rd, m, c in rows})
                except ValueError:
                    continue
            else:
                open_groups.setdefault(lam, []).append((d, mu, coeff))

    def get(self, lam: Partition) -> Character | None:
        lam = check_partition(lam)
        if not self._loaded:
            self._load()
        return self._mem.get(lam)

    def put(self, lam: Partition, chi: Character) -> None:
        lam = check_partition(lam)
        if not self._loaded:
            self._load()
        self._mem[lam] = chi
        if self.path is None:
            return
        d = chi.degree
        lines = [
            _line(_payload(d, lam, format_partition(mu), c))
            for mu, c in sorted(chi.coeffs.items(), reverse=True)
        ]
        lines.append(_line(_payload(d, lam, "*", len(chi.coeffs))))
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="ascii") as handle:
                handle.write("\n".join(lines) + "\n")
        except OSError as exc:
            warnings.warn(f"cache write failed ({exc}); continuing in memory", RuntimeWarning)

    def get_or_compute(self, lam: Partition) -> Character:
        lam = check_partition(lam)
        hit = self.get(lam)
        if hit is not None:
            return hit
        chi = simple_character(lam)
        _validate(lam, chi)
        self.put(lam, chi)
        return chi


_default_cache: CharacterCache | None = None


def set_cache_dir(directory: str | os.PathLike | None) -> None:
    """Point the module-level cache at a directory (None: env var or memory)."""
    global _default_cache
    _default_cache = CharacterCache(directory)


def cache_get_or_compute(lam: Partition) -> Character:
    """Fetch a simple character through the module-level cache."""
    global _default_cache
    if _default_cache is None:
        _default_cache = CharacterCache(None)
    return _default_cache.get_or_compute(lam)
