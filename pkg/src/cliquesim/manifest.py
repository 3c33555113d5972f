"""Run manifests: digests and metadata for a simulation output tree.

A manifest records every file a run produced (SHA-256 and size), the
model parameters, the engine, and the random-generator family, so a rerun
can be checked for byte-identical output and a stored tree can be
validated after the fact. The creation timestamp is the only field that
varies between identical reruns; snapshot files themselves never embed
time, so they stay byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path

from .sampling import GENERATOR_FAMILY

__all__ = [
    "MANIFEST_NAME",
    "build_manifest",
    "file_digest",
    "load_manifest",
    "verify_tree",
    "write_manifest",
]

MANIFEST_NAME = "manifest.json"
_FORMAT = "cliquesim manifest 1"


def file_digest(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def build_manifest(root: Path, files: list[Path], meta: dict) -> dict:
    """Digest ``files`` (paths under ``root``) and attach run metadata."""
    root = Path(root)
    entries = {}
    for path in files:
        path = Path(path)
        rel = path.relative_to(root).as_posix()
        entries[rel] = {"sha256": file_digest(path), "bytes": path.stat().st_size}
    return {
        "format": _FORMAT,
        "generator": GENERATOR_FAMILY,
        "created": datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        "meta": meta,
        "files": dict(sorted(entries.items())),
    }


def write_manifest(root: Path, manifest: dict) -> Path:
    path = Path(root) / MANIFEST_NAME
    path.write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    return path


def load_manifest(root: Path) -> dict:
    path = Path(root) / MANIFEST_NAME
    manifest = json.loads(path.read_text())
    if manifest.get("format") != _FORMAT:
        raise ValueError(f"{path} is not a recognized manifest (format {manifest.get('format')!r})")
    return manifest


def verify_tree(root: Path) -> list[str]:
    """Re-digest every listed file; returns problem descriptions (empty
    when the tree matches its manifest)."""
    root = Path(root)
    manifest = load_manifest(root)
    problems = []
    if manifest.get("generator") != GENERATOR_FAMILY:
        problems.append(
            f"generator family mismatch: manifest has {manifest.get('generator')!r},"
            f" this build uses {GENERATOR_FAMILY!r}"
        )
    for rel, entry in manifest["files"].items():
        path = root / rel
        if not path.is_file():
            problems.append(f"missing file: {rel}")
            continue
        size = path.stat().st_size
        if size != entry["bytes"]:
            problems.append(f"size mismatch: {rel} ({size} != {entry['bytes']})")
            continue
        digest = file_digest(path)
        if digest != entry["sha256"]:
            problems.append(f"digest mismatch: {rel}")
    return problems
