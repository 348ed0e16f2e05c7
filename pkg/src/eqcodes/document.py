"""JSON interchange for subspace and rank codes.

A code document is plain JSON with integer element encodings only, so any
other implementation can parse and re-verify it:

    {
      "format_version": "1",
      "field": {"p": 2, "m": 1, "modulus": [0, 1]},
      "n": 4,
      "words": [{"k": 2, "basis": [[1,0,0,0],[0,1,0,0]]}, ...],
      "profile": {...},          # optional, mirrors CodeProfile
      "provenance": "spread q=2 n=4 k=2"   # optional
    }

Round-trip is lossless because words are stored in canonical (RREF) form and
re-canonicalized on parse.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .codes import CodeProfile, SubspaceCode
from .gf import FieldCtx, field_new
from .rankmetric import RankCode
from .subspace import Subspace, subspace_from_generators

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    pass


def field_to_dict(ctx: FieldCtx) -> dict[str, Any]:
    return {"p": ctx.p, "m": ctx.m, "modulus": list(ctx.modulus)}


def field_from_dict(d: dict[str, Any]) -> FieldCtx:
    try:
        return field_new(int(d["p"]), int(d["m"]), [int(c) for c in d["modulus"]])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed field block: {exc}") from exc


def profile_to_dict(prof: CodeProfile) -> dict[str, Any]:
    center = None
    if prof.sunflower_center is not None:
        center = {"k": prof.sunflower_center.k,
                  "basis": prof.sunflower_center.basis.tolist()}
    return {
        "size": prof.size,
        "dimension_set": list(prof.dimension_set),
        "pairwise_distance_set": list(prof.pairwise_distance_set),
        "pairwise_intersection_dim_set": list(prof.pairwise_intersection_dim_set),
        "is_constant_dimension": prof.is_constant_dimension,
        "is_equidistant": prof.is_equidistant,
        "t": prof.t,
        "min_distance": prof.min_distance,
        "sunflower_center": center,
        "is_ball": prof.is_ball,
    }


def code_to_document(code: SubspaceCode, profile_block: Optional[CodeProfile] = None,
                     provenance: Optional[str] = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "field": field_to_dict(code.ctx),
        "n": code.n,
        "words": [{"k": w.k, "basis": w.basis.tolist()} for w in code.sorted_words()],
    }
    if profile_block is not None:
        doc["profile"] = profile_to_dict(profile_block)
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def document_to_code(doc: dict[str, Any]) -> SubspaceCode:
    """Parse a document back into a code; any embedded profile is ignored."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {doc.get('format_version')!r}")
    try:
        ctx = field_from_dict(doc["field"])
        n = int(doc["n"])
        words: list[Subspace] = []
        for entry in doc["words"]:
            basis = [[int(x) for x in row] for row in entry["basis"]]
            sub = subspace_from_generators(ctx, n, basis)
            if sub.k != int(entry["k"]):
                raise DocumentError(
                    f"word claims dimension {entry['k']} but basis spans {sub.k}")
            words.append(sub)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(f"malformed document: {exc}") from exc
    return SubspaceCode(ctx, n, words)


def rank_code_to_document(rc: RankCode, provenance: Optional[str] = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "field": field_to_dict(rc.ctx),
        "rows": rc.rows,
        "cols": rc.cols,
        "words": [w.tolist() for w in rc.sorted_words()],
    }
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def write_document(doc: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def read_document(path: str | Path) -> dict[str, Any]:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot read document {path}: {exc}") from exc
