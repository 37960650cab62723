"""Shipped golden data: energy tables and crystal-graph edge lists.

Files are looked up in ``$YOUNGWALLS_DATA_DIR`` first (if set), then next to
this module.  Shipped files are verified against ``SHA256SUMS``; override
files are not, so a reviewer can point the loader at hand-edited copies.
"""

from __future__ import annotations

import hashlib
import os
from pathlib import Path

from ..cartan import CartanType

ENV_VAR = "YOUNGWALLS_DATA_DIR"
PACKAGE_DIR = Path(__file__).resolve().parent


class DataFileError(RuntimeError):
    pass


def _checksums() -> dict[str, str]:
    sums = {}
    for line in (PACKAGE_DIR / "SHA256SUMS").read_text().splitlines():
        if line.strip():
            digest, name = line.split()
            sums[name] = digest
    return sums


def data_path(name: str) -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        candidate = Path(override) / name
        if candidate.exists():
            return candidate
    path = PACKAGE_DIR / name
    if not path.exists():
        raise DataFileError(f"missing data file {name}")
    digest = hashlib.sha256(path.read_bytes()).hexdigest()
    expected = _checksums().get(name)
    if expected is not None and digest != expected:
        raise DataFileError(f"checksum mismatch for {name}: {digest} != {expected}")
    return path


def energy_table_path(type_: CartanType | str) -> Path:
    return data_path(f"energy_{CartanType.parse(type_).slug}.csv")


def edge_list_path(type_: CartanType | str) -> Path:
    return data_path(f"edges_{CartanType.parse(type_).slug}.tsv")


def read_edge_list(path: Path | str) -> list[tuple[str, int, str]]:
    """Parse a ``source<TAB>i<TAB>target`` edge list."""
    edges = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise DataFileError(f"{path}:{lineno}: expected 3 tab-separated fields")
        src, i, tgt = parts
        edges.append((src, int(i), tgt))
    return edges
