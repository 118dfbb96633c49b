"""JSON Schemas for every report the command line emits."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

NAMES = ("verdict", "search_result", "record", "ledger", "probe", "conjecture", "formula")


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"unknown schema {name!r}")
    text = resources.files(__package__).joinpath(f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate(name: str, data) -> None:
    """Raise ``jsonschema.ValidationError`` if ``data`` does not match the named schema."""
    jsonschema.validate(data, load_schema(name))
