"""Small shared helpers: stable hashing and seed derivation."""

from __future__ import annotations

import hashlib
import json


def stable_hash(*parts: object, digest_size: int = 8) -> int:
    """Deterministic integer hash of the given parts.

    Unlike builtin ``hash``, the result does not depend on
    ``PYTHONHASHSEED`` or the process, so it is safe for reproducible
    corpus ids and derived RNG seeds.
    """
    h = hashlib.blake2b(digest_size=digest_size)
    for part in parts:
        h.update(str(part).encode("utf-8"))
        h.update(b"\x1f")
    return int.from_bytes(h.digest(), "big")


def derive_seed(*parts: object) -> int:
    """Derive a 63-bit RNG seed from arbitrary parts (doc id, index, ...)."""
    return stable_hash(*parts) & (2**63 - 1)


def content_id(text: str, prefix: str = "") -> str:
    """Short content-derived identifier, stable across runs."""
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=6).hexdigest()
    return f"{prefix}{digest}"


def config_hash(obj: object) -> str:
    """Short hash of a JSON-serializable config, for artifact manifests."""
    canonical = json.dumps(obj, sort_keys=True, ensure_ascii=False, default=str)
    return hashlib.blake2b(canonical.encode("utf-8"), digest_size=6).hexdigest()
