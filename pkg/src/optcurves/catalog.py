"""Loader for the packaged reference catalog.

The catalog (data/catalog.json) carries the audited transcription of the
classification tables, curve fixtures, special Gram forms, and lattice
entries. It ships with a sha256 sidecar; the loader refuses silently
corrupted data. `OPTCURVES_CATALOG` overrides the path (pointing at a
json file whose sidecar sits next to it, or with no sidecar at all, in
which case the checksum step is skipped).
"""

from __future__ import annotations

import hashlib
import json
import os
import pathlib
from functools import lru_cache
from typing import Any

__all__ = [
    "CatalogError",
    "catalog_path",
    "load_catalog",
    "table_orders",
    "fixture_rows",
    "appendix_entries",
    "special_form",
    "exceptional_rows",
    "t_sets",
    "prose_orders",
    "factored_to_int",
]

ENV_VAR = "OPTCURVES_CATALOG"
_DATA_DIR = pathlib.Path(__file__).resolve().parent / "data"


class CatalogError(Exception):
    """Missing or corrupted catalog data."""


def catalog_path() -> pathlib.Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return pathlib.Path(override)
    return _DATA_DIR / "catalog.json"


def _load_from(path: pathlib.Path) -> dict[str, Any]:
    if not path.is_file():
        raise CatalogError(f"catalog not found: {path}")
    text = path.read_text()
    sidecar = path.with_suffix(".sha256")
    if sidecar.is_file():
        want = sidecar.read_text().split()[0]
        got = hashlib.sha256(text.encode()).hexdigest()
        if got != want:
            raise CatalogError(
                f"catalog checksum mismatch: {path} has {got}, expected {want}"
            )
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid json: {exc}") from exc
    if data.get("version") != 1:
        raise CatalogError(f"unsupported catalog version: {data.get('version')!r}")
    return data


@lru_cache(maxsize=4)
def _cached(path_str: str) -> dict[str, Any]:
    return _load_from(pathlib.Path(path_str))


def load_catalog(path: str | pathlib.Path | None = None) -> dict[str, Any]:
    """Return the parsed catalog, verifying its checksum when present."""
    p = pathlib.Path(path) if path is not None else catalog_path()
    return _cached(str(p))


def factored_to_int(factored: list[list[int]]) -> int:
    """[[2, 4], [3, 1]] -> 48."""
    n = 1
    for p, e in factored:
        n *= p**e
    return n


def table_orders(d: int, dim: int, cat: dict | None = None) -> list[int] | None:
    """Orders listed for (discriminant, rank); [] means a printed dash,
    None means the rank is outside the table."""
    cat = cat or load_catalog()
    tab = cat["tables"].get(str(d))
    if tab is None or str(dim) not in tab:
        return None
    return [factored_to_int(f) for f in tab[str(dim)]]


def fixture_rows(d: int = -11, cat: dict | None = None) -> list[dict]:
    cat = cat or load_catalog()
    rows = cat["fixtures"].get(str(d))
    if rows is None:
        raise CatalogError(f"no fixture table for discriminant {d}")
    return rows


def appendix_entries(cat: dict | None = None) -> list[dict]:
    cat = cat or load_catalog()
    return cat["appendix"]


def special_form(name: str, cat: dict | None = None) -> dict:
    cat = cat or load_catalog()
    try:
        return cat["special_forms"][name]
    except KeyError as exc:
        raise CatalogError(f"no special form named {name!r}") from exc


def exceptional_rows(cat: dict | None = None) -> list[dict]:
    cat = cat or load_catalog()
    return cat["exceptional"]


def t_sets(cat: dict | None = None) -> dict:
    cat = cat or load_catalog()
    return cat["t_sets"]


def prose_orders(d: int, dim: int, cat: dict | None = None) -> list[int] | None:
    cat = cat or load_catalog()
    tab = cat["prose_orders"].get(str(d))
    if tab is None or str(dim) not in tab:
        return None
    return [factored_to_int(f) for f in tab[str(dim)]]
