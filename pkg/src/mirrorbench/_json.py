"""Canonical JSON helpers: every document the package writes is byte-stable."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path


def canonical_dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_doc(path: str | Path, doc: dict) -> None:
    Path(path).write_text(canonical_dumps(doc))


def read_doc(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())


def digest(text: str | bytes) -> str:
    data = text.encode() if isinstance(text, str) else text
    return hashlib.sha256(data).hexdigest()
