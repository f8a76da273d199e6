"""Binary sigma-table cache (SGAT format).

Layout: magic "SGAT", format version (u32 LE), alpha (f64 LE), n_max
(u64 LE), then n_max f64 LE sigma values for n = 1..n_max. Prefix sums
are recomputed on load.
"""

from __future__ import annotations

import os
import struct

import numpy as np

from .arith import Alpha, SigmaTable, build_sigma_table
from .errors import CacheError

__all__ = ["cache_write", "cache_read", "MAGIC", "VERSION"]

MAGIC = b"SGAT"
VERSION = 1
_HEADER = struct.Struct("<4sIdQ")


def cache_write(table: SigmaTable, path: str | os.PathLike) -> None:
    """Write a table cache atomically (temp file + rename)."""
    path = os.fspath(path)
    tmp = path + ".tmp"
    try:
        with open(tmp, "wb") as fh:
            fh.write(
                _HEADER.pack(MAGIC, VERSION, table.alpha.value, table.n_max)
            )
            fh.write(
                np.ascontiguousarray(
                    table.values[1:], dtype="<f8"
                ).tobytes()
            )
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_read(
    path: str | os.PathLike, expected_alpha: float | None = None
) -> SigmaTable:
    """Load a table cache; values are bit-exact, prefixes rebuilt."""
    path = os.fspath(path)
    try:
        with open(path, "rb") as fh:
            header = fh.read(_HEADER.size)
            if len(header) < _HEADER.size:
                raise CacheError(f"{path}: truncated header")
            magic, version, alpha_value, n_max = _HEADER.unpack(header)
            if magic != MAGIC:
                raise CacheError(f"{path}: bad magic {magic!r}")
            if version != VERSION:
                raise CacheError(
                    f"{path}: unsupported format version {version}"
                )
            if expected_alpha is not None and alpha_value != expected_alpha:
                raise CacheError(
                    f"{path}: cache has alpha={alpha_value}, "
                    f"requested alpha={expected_alpha}"
                )
            payload = fh.read(8 * n_max + 1)
    except FileNotFoundError as exc:
        raise CacheError(f"{path}: {exc.strerror}") from exc
    if len(payload) != 8 * n_max:
        raise CacheError(
            f"{path}: expected {8 * n_max} value bytes, got {len(payload)}"
        )
    body = np.frombuffer(payload, dtype="<f8")
    values = np.zeros(n_max + 1, dtype=np.float64)
    values[1:] = body
    values.setflags(write=False)
    prefix = np.cumsum(values)
    prefix.setflags(write=False)
    return SigmaTable(
        alpha=Alpha(alpha_value), n_max=int(n_max), values=values, prefix=prefix
    )


def load_or_build(
    n_max: int, alpha: Alpha, path: str | os.PathLike | None
) -> SigmaTable:
    """Use the cache when present and matching; otherwise sieve (and
    populate the cache if a path was given)."""
    if path is not None and os.path.exists(path):
        table = cache_read(path, expected_alpha=alpha.value)
        if table.n_max >= n_max:
            return table
    table = build_sigma_table(n_max, alpha)
    if path is not None:
        cache_write(table, path)
    return table
