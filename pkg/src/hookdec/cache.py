"""Optional on-disk cache of character tables.

Set ``HOOKDEC_CACHE_DIR`` to a writable directory.  Each table is stored as
``chartable-v1-n{n}.json``::

    {"format": "hookdec-chartable", "version": 1, "n": 4,
     "partitions": ["4", "3,1", ...], "values": [[...], ...],
     "sha256": "<hex digest of the canonical payload>"}

The digest covers the JSON of every other field (sorted keys, compact
separators).  A file that fails to parse, has the wrong version or shape,
or does not match its digest is treated as a cache miss and overwritten.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from .characters import CharacterTable, ClassFunction, character_table, install_table
from .partitions import enumerate_partitions, format_partition, parse_partition

ENV_VAR = "HOOKDEC_CACHE_DIR"
FORMAT = "hookdec-chartable"
VERSION = 1

log = logging.getLogger(__name__)


def _digest(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def table_path(directory: str | os.PathLike, n: int) -> Path:
    return Path(directory) / f"chartable-v{VERSION}-n{n}.json"


def encode_table(table: CharacterTable) -> str:
    payload = {
        "format": FORMAT,
        "version": VERSION,
        "n": table.n,
        "partitions": [format_partition(p) for p in table.partitions],
        "values": [list(row.values) for row in table.rows],
    }
    payload["sha256"] = _digest(payload)
    return json.dumps(payload, sort_keys=True)


def decode_table(text: str) -> CharacterTable | None:
    """Parse a cached table; ``None`` on any corruption."""
    try:
        payload = json.loads(text)
        digest = payload.pop("sha256")
        if digest != _digest(payload):
            return None
        if payload["format"] != FORMAT or payload["version"] != VERSION:
            return None
        n = payload["n"]
        parts = tuple(parse_partition(p) for p in payload["partitions"])
        if parts != enumerate_partitions(n):
            return None
        rows = tuple(ClassFunction(n, tuple(int(v) for v in row)) for row in payload["values"])
        if len(rows) != len(parts):
            return None
        return CharacterTable(n, parts, rows)
    except (ValueError, KeyError, TypeError, AttributeError):
        return None


def load_or_build(n: int, directory: str | os.PathLike | None = None) -> CharacterTable:
    """Character table of ``S_n``, read from (and written to) the cache directory if configured."""
    directory = directory if directory is not None else os.environ.get(ENV_VAR)
    if not directory:
        return character_table(n)
    path = table_path(directory, n)
    if path.exists():
        table = decode_table(path.read_text())
        if table is not None:
            install_table(table)
            return table
        log.warning("discarding corrupt cache file %s", path)
    table = character_table(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(encode_table(table))
    tmp.replace(path)
    return table
