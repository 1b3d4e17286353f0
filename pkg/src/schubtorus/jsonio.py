"""Canonical JSON: sorted keys, two-space indent, ASCII only, trailing LF."""

from __future__ import annotations

import json


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
