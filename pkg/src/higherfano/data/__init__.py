"""Curated reference data shipped with the package.

Set ``HIGHERFANO_DATA`` to a directory holding a replacement
``curated.json`` to override the bundled copy.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from importlib import resources
from pathlib import Path

ENV_VAR = "HIGHERFANO_DATA"
FILENAME = "curated.json"


def data_path() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override) / FILENAME
    return Path(str(resources.files(__name__).joinpath(FILENAME)))


@lru_cache(maxsize=None)
def _load(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("version") != 1:
        raise ValueError(f"{path}: unsupported curated-data version {data.get('version')!r}")
    return data


def curated() -> dict:
    """The curated records, read once per path."""
    return _load(str(data_path()))
