"""JSON documents for lattices, algebras and frames.

One schema for every kind. Common keys are ``kind``, ``n`` and the optional
``labels``; the rest depends on the kind:

========  ==============================================================
ol, oml   leq, ocomp, bot, top
qca       leq, ocomp, bot, top, dims, exists, diag
qia       dot, zero
cqia      dot, zero, dims, diamonds, diag
frame     dims, perp, rels, deltas
========  ==============================================================

Matrices are row-major lists of rows, relations use 0/1, and ``deltas`` is a
dims x dims array of sorted point lists. Meet and join are never stored; they
are derived from ``leq`` on load.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from .errors import MalformedTable, ParseError, ValidationError
from .frames import CylindricOrthoFrame
from .lattice import FiniteOrtholattice, QuantumCylindricAlgebra
from .qia import CylindricQia, QiaTable

KINDS = ("ol", "oml", "qca", "qia", "cqia", "frame")
KEY_ORDER = (
    "kind", "n", "labels", "leq", "ocomp", "bot", "top", "dot", "zero",
    "dims", "exists", "diamonds", "diag", "perp", "rels", "deltas",
)
REQUIRED = {
    "ol": ("leq", "ocomp", "bot", "top"),
    "oml": ("leq", "ocomp", "bot", "top"),
    "qca": ("leq", "ocomp", "bot", "top", "dims", "exists", "diag"),
    "qia": ("dot",),
    "cqia": ("dot", "zero", "dims", "diamonds", "diag"),
    "frame": ("dims", "perp", "rels", "deltas"),
}
OPTIONAL = {"qia": ("zero",)}

Payload = Union[FiniteOrtholattice, QuantumCylindricAlgebra, QiaTable, CylindricQia, CylindricOrthoFrame]


@dataclass(frozen=True)
class AlgebraDocument:
    kind: str
    payload: Payload

    def label(self, x: int) -> str:
        p = self.payload
        if isinstance(p, QuantumCylindricAlgebra):
            return p.lattice.label(x)
        if isinstance(p, CylindricQia):
            return p.qia.label(x)
        return p.label(x)


# -- reading ---------------------------------------------------------------


def _int(doc: dict, key: str) -> int:
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{key}: expected an integer")
    return v


def _vector(v: Any, key: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(v, list) or any(isinstance(e, bool) or not isinstance(e, int) for e in v):
        raise ParseError(f"{key}: expected a list of integers")
    if length is not None and len(v) != length:
        raise ParseError(f"{key}: expected {length} entries, got {len(v)}")
    return tuple(v)


def _matrix(v: Any, key: str, rows: int, cols: int | None = None) -> tuple[tuple[int, ...], ...]:
    cols = rows if cols is None else cols
    if not isinstance(v, list) or len(v) != rows:
        raise ParseError(f"{key}: expected {rows} rows")
    return tuple(_vector(row, f"{key}[{r}]", cols) for r, row in enumerate(v))


def _relation(v: Any, key: str, n: int) -> tuple[tuple[bool, ...], ...]:
    m = _matrix(v, key, n)
    for r, row in enumerate(m):
        for c, e in enumerate(row):
            if e not in (0, 1):
                raise ValidationError(f"{key}[{r}][{c}]: expected 0 or 1")
    return tuple(tuple(bool(e) for e in row) for row in m)


def _in_range(values, n: int, key: str) -> None:
    for v in values:
        if not 0 <= v < n:
            raise ValidationError(f"{key}: index {v} out of range 0..{n - 1}")


def _labels(doc: dict, n: int) -> tuple[str, ...] | None:
    if "labels" not in doc or doc["labels"] is None:
        return None
    v = doc["labels"]
    if not isinstance(v, list) or any(not isinstance(s, str) for s in v):
        raise ParseError("labels: expected a list of strings")
    if len(v) != n:
        raise ParseError(f"labels: expected {n} entries, got {len(v)}")
    return tuple(v)


def _lattice(doc: dict, n: int) -> FiniteOrtholattice:
    leq = _relation(doc["leq"], "leq", n)
    ocomp = _vector(doc["ocomp"], "ocomp", n)
    _in_range(ocomp, n, "ocomp")
    bot, top = _int(doc, "bot"), _int(doc, "top")
    _in_range((bot,), n, "bot")
    _in_range((top,), n, "top")
    try:
        L = FiniteOrtholattice.from_order(leq, ocomp, _labels(doc, n))
    except MalformedTable as e:
        raise ValidationError(str(e)) from None
    if (L.bot, L.top) != (bot, top):
        raise ValidationError(f"bot/top: leq has bounds {L.bot}/{L.top}, document says {bot}/{top}")
    return L


def _dims(doc: dict) -> int:
    d = _int(doc, "dims")
    if d < 0:
        raise ValidationError("dims: must be non-negative")
    return d


def _element_table(v: Any, key: str, rows: int, cols: int, n: int) -> tuple[tuple[int, ...], ...]:
    m = _matrix(v, key, rows, cols)
    for r, row in enumerate(m):
        _in_range(row, n, f"{key}[{r}]")
    return m


def from_dict(doc: Any) -> AlgebraDocument:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    allowed = {"kind", "n", "labels", *REQUIRED[kind], *OPTIONAL.get(kind, ())}
    for key in ("n", *REQUIRED[kind]):
        if key not in doc:
            raise ParseError(f"{key}: missing")
    for key in doc:
        if key not in allowed:
            raise ParseError(f"{key}: unexpected key for kind {kind!r}")
    n = _int(doc, "n")
    if n < 1:
        raise ValidationError("n: must be positive")

    if kind in ("ol", "oml"):
        return AlgebraDocument(kind, _lattice(doc, n))
    if kind == "qca":
        L = _lattice(doc, n)
        d = _dims(doc)
        quantifiers = _element_table(doc["exists"], "exists", d, n, n)
        diag = _element_table(doc["diag"], "diag", d, d, n)
        return AlgebraDocument(kind, QuantumCylindricAlgebra(L, quantifiers, diag))
    if kind in ("qia", "cqia"):
        dot = _element_table(doc["dot"], "dot", n, n, n)
        zero = doc.get("zero")
        if zero is not None:
            zero = _int(doc, "zero")
            _in_range((zero,), n, "zero")
        Q = QiaTable(n, dot, zero, _labels(doc, n))
        if kind == "qia":
            return AlgebraDocument(kind, Q)
        d = _dims(doc)
        diamonds = _element_table(doc["diamonds"], "diamonds", d, n, n)
        diag = _element_table(doc["diag"], "diag", d, d, n)
        return AlgebraDocument(kind, CylindricQia(Q, diamonds, diag))

    d = _dims(doc)
    perp = _relation(doc["perp"], "perp", n)
    if not isinstance(doc["rels"], list) or len(doc["rels"]) != d:
        raise ParseError(f"rels: expected {d} relations")
    rels = tuple(_relation(r, f"rels[{i}]", n) for i, r in enumerate(doc["rels"]))
    if not isinstance(doc["deltas"], list) or len(doc["deltas"]) != d:
        raise ParseError(f"deltas: expected {d} rows")
    deltas = []
    for i, row in enumerate(doc["deltas"]):
        if not isinstance(row, list) or len(row) != d:
            raise ParseError(f"deltas[{i}]: expected {d} entries")
        cells = []
        for k, pts in enumerate(row):
            pts = _vector(pts, f"deltas[{i}][{k}]")
            _in_range(pts, n, f"deltas[{i}][{k}]")
            cells.append(frozenset(pts))
        deltas.append(tuple(cells))
    return AlgebraDocument(kind, CylindricOrthoFrame(n, perp, rels, tuple(deltas), _labels(doc, n)))


def loads(text: str) -> AlgebraDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}: {e.msg}") from None
    return from_dict(doc)


def parse(path: str | os.PathLike) -> AlgebraDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror or e}") from None
    return loads(text)


# -- writing ---------------------------------------------------------------


def _bitrows(rel) -> list[list[int]]:
    return [[int(bool(e)) for e in row] for row in rel]


def to_dict(doc: AlgebraDocument) -> dict[str, Any]:
    p, kind = doc.payload, doc.kind
    out: dict[str, Any] = {"kind": kind}
    if isinstance(p, FiniteOrtholattice) or isinstance(p, QuantumCylindricAlgebra):
        L = p if isinstance(p, FiniteOrtholattice) else p.lattice
        out.update(n=L.n, labels=L.labels, leq=_bitrows(L.leq), ocomp=list(L.ocomp), bot=L.bot, top=L.top)
        if isinstance(p, QuantumCylindricAlgebra):
            out.update(dims=p.d, exists=[list(q) for q in p.quantifiers], diag=[list(r) for r in p.diag])
    elif isinstance(p, (QiaTable, CylindricQia)):
        Q = p if isinstance(p, QiaTable) else p.qia
        out.update(n=Q.n, labels=Q.labels, dot=[list(r) for r in Q.dot], zero=Q.zero)
        if isinstance(p, CylindricQia):
            out.update(dims=p.d, diamonds=[list(r) for r in p.diamonds], diag=[list(r) for r in p.diag])
    else:
        out.update(
            n=p.m,
            labels=p.labels,
            dims=p.d,
            perp=_bitrows(p.perp),
            rels=[_bitrows(r) for r in p.rels],
            deltas=[[sorted(s) for s in row] for row in p.deltas],
        )
    if out.get("labels") is None:
        out.pop("labels", None)
    if kind == "qia" and out.get("zero") is None:
        out.pop("zero", None)
    return {k: out[k] for k in KEY_ORDER if k in out}


def _render(value: Any, indent: int) -> str:
    if isinstance(value, list) and any(isinstance(e, list) for e in value):
        pad = "  " * (indent + 1)
        inner = ",\n".join(pad + _render(e, indent + 1) for e in value)
        return "[\n" + inner + "\n" + "  " * indent + "]"
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def dumps(doc: AlgebraDocument) -> str:
    """Canonical text: fixed key order, one matrix row per line."""
    d = to_dict(doc)
    body = ",\n".join(f"  {json.dumps(k)}: {_render(v, 1)}" for k, v in d.items())
    return "{\n" + body + "\n}\n"


def canonicalize(text: str) -> str:
    return dumps(loads(text))


def atomic_write(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write(doc: AlgebraDocument, path: str | os.PathLike) -> None:
    atomic_write(path, dumps(doc))


def document_for(obj: Payload, kind: str | None = None) -> AlgebraDocument:
    """Wrap a domain object, picking the natural kind when none is given."""
    if kind is None:
        kind = {
            FiniteOrtholattice: "ol",
            QuantumCylindricAlgebra: "qca",
            QiaTable: "qia",
            CylindricQia: "cqia",
            CylindricOrthoFrame: "frame",
        }[type(obj)]
    return AlgebraDocument(kind, obj)
