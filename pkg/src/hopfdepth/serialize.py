"""JSON formats.  Rationals are strings ``"p/q"`` (``"p"`` when integral).

group      {"name", "order", "names", "table"}              identity at index 0
algebra    {"name", "dim", "labels", "unit": [[k, c]], "mult": [[i, j, k, c]]}
hopf       {"name", "algebra": <algebra>, "comult": [[i, j, k, c]],
            "counit": [c], "antipode": [[i, k, c]]}
embedding  {"sub": <algebra or hopf>, "images": [[[k, c], ...], ...]}
           (alternatively "matrix": dim(B) x dim(A) array of rationals)
"""
from __future__ import annotations

import hashlib
import json
from typing import Any

from .algebra import AlgebraError, StructureAlgebra, SubalgebraEmbedding
from .groups import FiniteGroup, GroupError
from .hopf import HopfStructure
from .linalg import Matrix, rat, rat_str


class FormatError(ValueError):
    pass


def dumps(obj: Any) -> str:
    """Canonical, byte-deterministic JSON."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def sha256(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


def _need(d: dict, *keys):
    if not isinstance(d, dict):
        raise FormatError("expected a JSON object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")


# ---------------------------------------------------------------- groups

def group_to_json(G: FiniteGroup) -> dict:
    return {"name": G.name, "order": G.order, "names": list(G.names),
            "table": [list(r) for r in G.table]}


def group_from_json(d: dict) -> FiniteGroup:
    _need(d, "names", "table")
    if "order" in d and d["order"] != len(d["names"]):
        raise GroupError("order does not match the number of names")
    return FiniteGroup(str(d.get("name", "G")), tuple(str(x) for x in d["names"]),
                       tuple(tuple(r) for r in d["table"]))


# ---------------------------------------------------------------- algebras

def algebra_to_json(A: StructureAlgebra) -> dict:
    mult = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k in sorted(A.mult[i][j]):
                mult.append([i, j, k, rat_str(A.mult[i][j][k])])
    return {"name": A.name, "dim": A.dim, "labels": list(A.labels),
            "unit": [[k, rat_str(c)] for k, c in sorted(A.unit.items())], "mult": mult}


def algebra_from_json(d: dict) -> StructureAlgebra:
    _need(d, "dim", "unit", "mult")
    n = int(d["dim"])
    mult = [[{} for _ in range(n)] for _ in range(n)]
    try:
        for i, j, k, c in d["mult"]:
            v = mult[i][j]
            v[k] = v.get(k, 0) + rat(c)
        unit = {int(k): rat(c) for k, c in d["unit"]}
    except (TypeError, IndexError, ValueError) as exc:
        raise FormatError(f"bad structure constants: {exc}") from None
    labels = tuple(d.get("labels") or [f"e{i}" for i in range(n)])
    return StructureAlgebra(n, tuple(tuple({k: c for k, c in v.items() if c} for v in r) for r in mult),
                            {k: c for k, c in unit.items() if c}, labels, str(d.get("name", "")))


# ---------------------------------------------------------------- Hopf algebras

def hopf_to_json(H: HopfStructure) -> dict:
    comult = []
    for i in range(H.dim):
        for (j, k) in sorted(H.comult[i]):
            comult.append([i, j, k, rat_str(H.comult[i][(j, k)])])
    antipode = [[i, k, rat_str(c)] for i in range(H.dim) for k, c in sorted(H.antipode[i].items())]
    return {"name": H.name, "algebra": algebra_to_json(H.alg), "comult": comult,
            "counit": [rat_str(c) for c in H.counit], "antipode": antipode}


def hopf_from_json(d: dict) -> HopfStructure:
    _need(d, "algebra", "comult", "counit", "antipode")
    A = algebra_from_json(d["algebra"])
    n = A.dim
    comult = [dict() for _ in range(n)]
    antipode = [dict() for _ in range(n)]
    try:
        for i, j, k, c in d["comult"]:
            comult[i][(j, k)] = comult[i].get((j, k), 0) + rat(c)
        for i, k, c in d["antipode"]:
            antipode[i][k] = antipode[i].get(k, 0) + rat(c)
        counit = [rat(c) for c in d["counit"]]
    except (TypeError, IndexError, ValueError) as exc:
        raise FormatError(f"bad coalgebra data: {exc}") from None
    return HopfStructure.build(A, comult, counit, antipode, str(d.get("name", A.name)))


def is_hopf_json(d: dict) -> bool:
    return isinstance(d, dict) and "algebra" in d and "comult" in d


# ---------------------------------------------------------------- embeddings

def embedding_to_json(e: SubalgebraEmbedding, sub_hopf: HopfStructure | None = None) -> dict:
    sub = hopf_to_json(sub_hopf) if sub_hopf is not None else algebra_to_json(e.sub)
    return {"sub": sub, "images": [[[k, rat_str(c)] for k, c in sorted(v.items())] for v in e.images]}


def embedding_from_json(d: dict, amb: StructureAlgebra):
    """Returns (embedding, sub Hopf structure or None)."""
    _need(d, "sub")
    sub_hopf = hopf_from_json(d["sub"]) if is_hopf_json(d["sub"]) else None
    sub = sub_hopf.alg if sub_hopf is not None else algebra_from_json(d["sub"])
    if "images" in d:
        try:
            images = tuple({int(k): rat(c) for k, c in v if rat(c)} for v in d["images"])
        except (TypeError, ValueError) as exc:
            raise FormatError(f"bad images: {exc}") from None
        return SubalgebraEmbedding(sub, amb, images), sub_hopf
    if "matrix" in d:
        return SubalgebraEmbedding.from_matrix(sub, amb, Matrix.from_rows(d["matrix"])), sub_hopf
    raise FormatError("embedding needs 'images' or 'matrix'")
