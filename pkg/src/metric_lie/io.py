"""JSON documents for metric Lie algebras (schema version "1").

Coefficients are exact rational strings such as ``"3/2"``. Brackets are
listed sparsely for ``i < j``; the Gram matrix is dense on export and may be
dense or sparse on import.
"""

from __future__ import annotations

import json
from typing import Any

from metric_lie.errors import UsageError
from metric_lie.forms import MetricLieAlgebra
from metric_lie.lie import from_structure_constants
from metric_lie.linalg import ZERO, Matrix, Subspace, SymBilinearForm, fmt, rat

SCHEMA_VERSION = "1"

__all__ = ["SCHEMA_VERSION", "to_document", "from_document", "dumps", "loads", "subspace_json"]


def to_document(m: MetricLieAlgebra, metadata: dict | None = None) -> dict:
    meta = dict(metadata or {})
    if m.name and "name" not in meta:
        meta["name"] = m.name
    return {
        "schema_version": SCHEMA_VERSION,
        "dim": m.dim,
        "labels": list(m.labels),
        "brackets": [
            {"i": i, "j": j, "k": k, "coeff": fmt(c)} for i, j, k, c in m.algebra.entries()
        ],
        "gram": m.form.gram.to_strings(),
        "metadata": meta,
    }


def _field(doc: dict, key: str, kind, where: str = ""):
    if key not in doc:
        raise UsageError(f"missing field {where}{key}")
    value = doc[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise UsageError(f"field {where}{key} has the wrong type")
    return value


def _rational(value: Any, where: str):
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise UsageError(f"{where}: coefficients must be rational strings like \"3/2\"")
    try:
        return rat(value)
    except UsageError as exc:
        raise UsageError(f"{where}: {exc}") from None


def _gram(raw: Any, n: int) -> Matrix:
    if isinstance(raw, list):
        if len(raw) != n or any(not isinstance(r, list) or len(r) != n for r in raw):
            raise UsageError(f"gram must be a {n}x{n} array")
        return Matrix(
            [[_rational(v, f"gram[{a}][{b}]") for b, v in enumerate(r)] for a, r in enumerate(raw)], n
        )
    if isinstance(raw, dict) and isinstance(raw.get("entries"), list):
        g = [[ZERO] * n for _ in range(n)]
        for t, e in enumerate(raw["entries"]):
            where = f"gram.entries[{t}]"
            if not isinstance(e, dict):
                raise UsageError(f"{where} must be an object")
            i, j = _field(e, "i", int, where + "."), _field(e, "j", int, where + ".")
            if not (0 <= i < n and 0 <= j < n):
                raise UsageError(f"{where} index out of range")
            v = _rational(_field(e, "value", (str, int), where + "."), where + ".value")
            g[i][j] = g[j][i] = v
        return Matrix(g, n)
    raise UsageError("gram must be a dense array or an object with 'entries'")


def from_document(doc: Any) -> MetricLieAlgebra:
    if not isinstance(doc, dict):
        raise UsageError("document must be a JSON object")
    version = _field(doc, "schema_version", str)
    if version != SCHEMA_VERSION:
        raise UsageError(f"unsupported schema_version {version!r}")
    n = _field(doc, "dim", int)
    if n < 0:
        raise UsageError("dim must be non-negative")
    labels = doc.get("labels", [f"e{i + 1}" for i in range(n)])
    if not isinstance(labels, list) or len(labels) != n or not all(isinstance(x, str) for x in labels):
        raise UsageError(f"labels must be {n} strings")
    entries = []
    for t, b in enumerate(_field(doc, "brackets", list)):
        where = f"brackets[{t}]"
        if not isinstance(b, dict):
            raise UsageError(f"{where} must be an object")
        i, j, k = (_field(b, key, int, where + ".") for key in ("i", "j", "k"))
        if not i < j:
            raise UsageError(f"{where}: brackets are listed with i < j")
        entries.append((i, j, k, _rational(_field(b, "coeff", (str, int), where + "."), where + ".coeff")))
    algebra = from_structure_constants(n, labels, entries)
    gram = _gram(doc.get("gram", [[ "0"] * n for _ in range(n)]), n)
    if not gram.is_symmetric():
        raise UsageError("gram must be symmetric")
    meta = doc.get("metadata", {})
    name = meta.get("name", "") if isinstance(meta, dict) else ""
    return MetricLieAlgebra(algebra, SymBilinearForm(gram), str(name))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def loads(text: str) -> MetricLieAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def subspace_json(w: Subspace) -> list[list[str]]:
    return [[fmt(a) for a in v] for v in w.vectors]
