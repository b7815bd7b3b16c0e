"""Cayley table interchange: JSON, headerless CSV and GAP ``LoopByCayleyTable``."""

from __future__ import annotations

import csv
import io
import json
import re

from .loopcore import LoopTable

SCHEMA = 1


def to_json(t: LoopTable, /, **meta) -> str:
    doc = {"schema": SCHEMA, "n": t.n, "p": t.p, "q": t.q, "table": t.table.tolist()}
    doc.update(meta)
    return json.dumps(doc) + "\n"


def from_json(text: str) -> LoopTable:
    doc = json.loads(text)
    t = LoopTable(doc["table"], p=doc.get("p"), q=doc.get("q"))
    if t.n != doc["n"]:
        raise ValueError(f"declared n={doc['n']} but table has {t.n} rows")
    return t


def to_csv(t: LoopTable) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(t.table.tolist())
    return buf.getvalue()


def from_csv(text: str, p=None, q=None) -> LoopTable:
    rows = [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
    return LoopTable(rows, p=p, q=q)


def to_gap(t: LoopTable) -> str:
    rows = ",\n  ".join("[" + ",".join(str(x + 1) for x in row) + "]" for row in t.table.tolist())
    return f"LoopByCayleyTable([\n  {rows}\n]);\n"


_GAP_RE = re.compile(r"LoopByCayleyTable\(\s*(\[.*\])\s*\)\s*;?\s*$", re.S)


def from_gap(text: str, p=None, q=None) -> LoopTable:
    m = _GAP_RE.search(text.strip())
    if not m:
        raise ValueError("not a LoopByCayleyTable expression")
    rows = json.loads(m.group(1))
    return LoopTable([[x - 1 for x in row] for row in rows], p=p, q=q)


WRITERS = {"json": to_json, "csv": to_csv, "gap": to_gap}
